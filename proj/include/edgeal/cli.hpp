#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edgeal/graph.hpp"
#include "edgeal/integer_rank.hpp"

namespace edgeal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxPower = 5;

struct RunConfig {
  std::string command;

  // Graph sources; all given sources are concatenated in this order.
  std::optional<int> exhaustive;  // every isomorphism class on 1..N vertices
  std::vector<std::string> graph6_files;
  std::vector<std::string> edge_files;
  std::vector<std::string> inline_edges;
  std::vector<std::string> builtins;
  std::vector<std::string> graph_specs;  // builtin spec or graph6 string
  std::vector<std::string> positional;
  int min_vertices = 0;

  int s_min = 1;
  int s_max = 3;
  std::optional<std::pair<int, int>> k_range;
  std::vector<std::string> statements;  // empty means all
  double timeout_seconds = 60.0;
  int jobs = 0;  // 0: OpenMP default
  std::string out_path;  // empty: standard output
  Field field{};
  bool use_cache = true;
};

/// "3" or "2..4". Throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);

/// Resolves every configured source into graphs. Throws ParseError,
/// std::invalid_argument or std::runtime_error (unreadable file).
std::vector<Graph> load_graphs(const RunConfig& cfg);

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_encode(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_decode(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line handling; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgeal::cli
