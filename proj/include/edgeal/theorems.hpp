#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "edgeal/betti.hpp"
#include "edgeal/graph.hpp"
#include "edgeal/ideal.hpp"
#include "edgeal/reg_store.hpp"
#include "json.hpp"

namespace edgeal {

enum class Status { pass, fail, not_applicable, timeout };

std::string to_string(Status s);

/// Outcome of checking one statement on one instance. A fail always carries
/// the computed quantities on both sides; a gated statement whose hypothesis
/// is false reports not_applicable together with the evaluated hypothesis.
struct CheckReport {
  std::string statement;
  std::string graph;  // graph_id of the input graph
  std::string input;  // graph6 of the graph as given; edge parameters refer to it
  int n = 0;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::pass;
  nlohmann::json hypothesis;  // null when the statement is unconditional
  nlohmann::json witness = nlohmann::json::object();
};

nlohmann::json to_json(const CheckReport& r);

struct CheckOptions {
  Field field{};
  double timeout_seconds = 60.0;
  /// Optional persistent cache for graph-level regularities.
  RegularityStore* store = nullptr;
};

/// The ideals attached to a graph whose regularity is isomorphism-invariant
/// and therefore cacheable by canonical graph id.
enum class GraphIdeal {
  edge,           // I(G)
  ordinary,       // I(G)^s
  symbolic,       // I(G)^(s)
  symbolic_plus,  // I(G)^(s+1) + I(G)^s
};

/// Shared, thread-safe state for a batch of checks: field, per-instance time
/// budget, and regularity memoisation.
class CheckContext {
 public:
  explicit CheckContext(CheckOptions opts = {});

  const CheckOptions& options() const { return opts_; }
  Deadline start_instance() const;

  MonomialIdeal ideal_of(const Graph& g, GraphIdeal kind, int s = 1) const;
  int regularity_of(const Graph& g, GraphIdeal kind, int s, const Deadline& d);
  int regularity_of(const MonomialIdeal& a, const Deadline& d);

 private:
  CheckOptions opts_;
  std::mutex mu_;
  std::map<std::string, int> memo_;
};

// Every checker throws std::invalid_argument when its edge arguments are not
// edges of g or its integer parameters are out of range.

/// (I^(2) : e) against the explicit neighbourhood formula.
CheckReport check_seccol(const Graph& g, Edge e, CheckContext& ctx);
/// (I^(s+1) : e_1...e_s) against ((I^(2) : e_1)^(s) : e_2...e_s), where the
/// inner symbolic power is taken over the minimal primes of (I^(2) : e_1).
CheckReport check_col(const Graph& g, const std::vector<Edge>& edges, CheckContext& ctx);
CheckReport check_rfirst(const Graph& g, int s, CheckContext& ctx);
CheckReport check_base(const Graph& g, Edge e, CheckContext& ctx);
CheckReport check_lemreg(const Graph& g, const std::vector<Edge>& edges, CheckContext& ctx);
CheckReport check_1main(const Graph& g, int s, CheckContext& ctx);
CheckReport check_2main(const Graph& g, int s, CheckContext& ctx);
CheckReport check_cont(const Graph& g, int s, CheckContext& ctx);
CheckReport check_twth(const Graph& g, CheckContext& ctx);
CheckReport check_regord(const Graph& g, int k, CheckContext& ctx);
CheckReport check_resycy(const Graph& g, int k, CheckContext& ctx);
/// u = e_1 e_2. The equality is evaluated even when g has a gap; the status
/// is then not_applicable and the witness records whether it held.
CheckReport check_fouthr(const Graph& g, const std::vector<Edge>& edges, CheckContext& ctx);
/// reg(I^(s)) = 2s for s = 2, 3, 4 on co-chordal graphs. Powers 5..max_power
/// are computed as exploration only and never affect the status.
CheckReport check_fococh(const Graph& g, CheckContext& ctx, int max_power = 4);
/// Three conjectured relations between reg(I), reg(I^s) and reg(I^(s)) for
/// s = 1..s_max. A fail is a potential counterexample.
CheckReport survey_conjectures(const Graph& g, int s_max, CheckContext& ctx);
/// reg(I) = 2 iff the complement is chordal.
CheckReport check_froberg(const Graph& g, CheckContext& ctx);
/// I^(s) = I^s on bipartite graphs.
CheckReport check_bipartite(const Graph& g, int s, CheckContext& ctx);
/// odd girth > 2k-1 implies I^(s) = I^s for all s <= k.
CheckReport check_rty(const Graph& g, int k, CheckContext& ctx);

/// Statement identifiers in canonical order.
const std::vector<std::string>& statement_ids();

struct SweepParams {
  std::vector<std::string> statements;
  int s_min = 1;
  int s_max = 3;
  int k_min = 1;
  int k_max = 3;
};

/// Every instance of every selected statement on g: each edge, each edge
/// multiset, each s or k in range, as the statement requires. Reports come
/// back in (statement, instance) order.
std::vector<CheckReport> run_checks(const Graph& g, const SweepParams& params, CheckContext& ctx);

/// Multisets of size k drawn from the edges of g, in lexicographic order.
std::vector<std::vector<Edge>> edge_multisets(const Graph& g, int k);

}  // namespace edgeal
