#include "edgeal/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "edgeal/enumerate.hpp"
#include "edgeal/graph_io.hpp"
#include "edgeal/reg_store.hpp"
#include "edgeal/symbolic.hpp"
#include "edgeal/theorems.hpp"
#include "json.hpp"

namespace edgeal::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void append_graph6_lines(const std::string& text, const std::string& origin, std::vector<Graph>& out) {
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(origin + ":" + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
}

// A builtin family spec, else a graph6 string.
std::vector<Graph> graph_from_spec(const std::string& spec) {
  try {
    return builtin_from_spec(spec);
  } catch (const std::invalid_argument&) {
  }
  return {decode_graph6(spec)};
}

std::unique_ptr<RegularityStore> open_store(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.use_cache) return nullptr;
  try {
    return std::make_unique<DiskRegularityStore>(default_cache_dir());
  } catch (const std::exception& e) {
    err << "warning: result cache disabled: " << e.what() << '\n';
    return nullptr;
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.s_min < 1 || cfg.s_max > kMaxPower || cfg.s_min > cfg.s_max)
    throw UsageError("--s must lie within 1.." + std::to_string(kMaxPower));
  if (cfg.k_range) {
    auto [lo, hi] = *cfg.k_range;
    if (lo < 1 || hi > kMaxPower || lo > hi) throw UsageError("--k must lie within 1.." + std::to_string(kMaxPower));
  }
  if (cfg.exhaustive && (*cfg.exhaustive < 1 || *cfg.exhaustive > kMaxEnumerationOrder))
    throw UsageError("--exhaustive must lie within 1.." + std::to_string(kMaxEnumerationOrder));
  if (cfg.jobs < 0) throw UsageError("--jobs must be nonnegative");
  validate_field(cfg.field);
  const auto& known = statement_ids();
  for (const auto& id : cfg.statements)
    if (std::find(known.begin(), known.end(), id) == known.end()) throw UsageError("unknown statement '" + id + "'");
}

std::ostream* open_output(const RunConfig& cfg, std::ostream& out, std::ofstream& file) {
  if (cfg.out_path.empty() || cfg.out_path == "-") return &out;
  file.open(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write '" + cfg.out_path + "'");
  return &file;
}

void set_jobs(const RunConfig& cfg) {
  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
}

// Runs work(i) for every graph in parallel and hands the results to emit in
// input order.
template <typename Work, typename Emit>
void ordered_sweep(std::size_t count, Work&& work, Emit&& emit) {
  std::exception_ptr error;
  std::atomic<bool> stop{false};
  const long total = static_cast<long>(count);
#pragma omp parallel for ordered schedule(dynamic, 1)
  for (long i = 0; i < total; ++i) {
    decltype(work(std::size_t{0})) result{};
    bool ok = false;
    if (!stop.load()) {
      try {
        result = work(static_cast<std::size_t>(i));
        ok = true;
      } catch (...) {
#pragma omp critical(edgeal_cli_error)
        if (!error) error = std::current_exception();
        stop.store(true);
      }
    }
#pragma omp ordered
    if (ok) emit(result);
  }
  if (error) std::rethrow_exception(error);
}

json reg_or_null(CheckContext& ctx, const Graph& g, GraphIdeal kind, int s, bool& timed_out) {
  try {
    return ctx.regularity_of(g, kind, s, ctx.start_instance());
  } catch (const TimeoutError&) {
    timed_out = true;
    return nullptr;
  }
}

json compute_record(const Graph& g, const RunConfig& cfg, CheckContext& ctx) {
  const auto og = odd_girth(g);
  const MonomialIdeal ideal = edge_ideal(g);
  json rec = {{"graph", graph_id(g)},
              {"input", encode_graph6(g)},
              {"n", g.order()},
              {"edge_count", g.edge_count()},
              {"odd_girth", og ? json(*og) : json(nullptr)},
              {"bipartite", is_bipartite(g)},
              {"chordal", is_chordal(g)},
              {"co_chordal", is_chordal(complement(g))},
              {"gap_free", is_gap_free(g)}};
  if (ideal.is_zero()) {
    rec["edge_ideal"] = {{"zero_ideal", true}, {"generators", 0}, {"reg", nullptr}};
    rec["powers"] = json::array();
    rec["timeout"] = false;
    return rec;
  }
  bool timed_out = false;
  rec["edge_ideal"] = {{"zero_ideal", false},
                       {"generators", ideal.size()},
                       {"reg", reg_or_null(ctx, g, GraphIdeal::edge, 1, timed_out)}};
  rec["powers"] = json::array();
  for (int s = cfg.s_min; s <= cfg.s_max; ++s) {
    const MonomialIdeal ord = power(ideal, s);
    const MonomialIdeal sym = symbolic_power(g, s);
    rec["powers"].push_back({{"s", s},
                             {"ordinary_generators", ord.size()},
                             {"symbolic_generators", sym.size()},
                             {"equal", ord == sym},
                             {"reg_power", reg_or_null(ctx, g, GraphIdeal::ordinary, s, timed_out)},
                             {"reg_symbolic", reg_or_null(ctx, g, GraphIdeal::symbolic, s, timed_out)}});
  }
  rec["timeout"] = timed_out;
  return rec;
}

struct Tally {
  std::size_t counts[4] = {0, 0, 0, 0};
};

void print_summary(const std::map<std::string, Tally>& tallies, std::size_t graphs, std::ostream& err) {
  err << "graphs checked: " << graphs << '\n';
  err << std::left << std::setw(12) << "statement" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
      << std::setw(8) << "n/a" << std::setw(9) << "timeout" << '\n';
  std::size_t fails = 0;
  for (const auto& id : statement_ids()) {
    auto it = tallies.find(id);
    if (it == tallies.end()) continue;
    const auto& c = it->second.counts;
    err << std::left << std::setw(12) << id << std::right << std::setw(8) << c[0] << std::setw(8) << c[1]
        << std::setw(8) << c[2] << std::setw(9) << c[3] << '\n';
    fails += c[1];
  }
  if (fails > 0) err << "FAIL: " << fails << " failing instance(s); see records with \"status\":\"fail\"\n";
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw std::invalid_argument("bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

std::vector<Graph> load_graphs(const RunConfig& cfg) {
  std::vector<Graph> out;
  if (cfg.exhaustive) {
    auto all = enumerate_graphs_up_to(*cfg.exhaustive);
    out.insert(out.end(), all.begin(), all.end());
  }
  for (const auto& path : cfg.graph6_files) append_graph6_lines(read_file(path), path, out);
  for (const auto& path : cfg.edge_files) {
    const std::string text = read_file(path);
    try {
      out.push_back(parse_edge_list(text));
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what(), e.offset());
    }
  }
  for (const auto& text : cfg.inline_edges) out.push_back(parse_inline_edges(text, cfg.min_vertices));
  for (const auto& name : cfg.builtins) {
    auto gs = builtin_from_spec(name);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  for (const auto& spec : cfg.graph_specs) {
    auto gs = graph_from_spec(spec);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  RunConfig local = cfg;
  local.graph_specs.insert(local.graph_specs.end(), cfg.positional.begin(), cfg.positional.end());
  const auto graphs = load_graphs(local);
  if (graphs.empty()) throw UsageError("no input graphs");
  std::ofstream file;
  std::ostream* sink = open_output(cfg, out, file);
  auto store = open_store(cfg, err);
  CheckContext ctx(CheckOptions{cfg.field, cfg.timeout_seconds, store.get()});
  set_jobs(cfg);
  std::size_t timeouts = 0;
  ordered_sweep(
      graphs.size(), [&](std::size_t i) { return compute_record(graphs[i], cfg, ctx); },
      [&](const json& rec) {
        if (rec.value("timeout", false)) ++timeouts;
        *sink << rec.dump() << '\n';
      });
  sink->flush();
  err << "graphs computed: " << graphs.size();
  if (timeouts > 0) err << " (" << timeouts << " with timeouts)";
  err << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  RunConfig local = cfg;
  local.graph_specs.insert(local.graph_specs.end(), cfg.positional.begin(), cfg.positional.end());
  const auto graphs = load_graphs(local);
  if (graphs.empty()) throw UsageError("no input graphs");
  SweepParams params;
  params.statements = cfg.statements.empty() ? statement_ids() : cfg.statements;
  params.s_min = cfg.s_min;
  params.s_max = cfg.s_max;
  params.k_min = cfg.k_range ? cfg.k_range->first : cfg.s_min;
  params.k_max = cfg.k_range ? cfg.k_range->second : cfg.s_max;
  std::ofstream file;
  std::ostream* sink = open_output(cfg, out, file);
  auto store = open_store(cfg, err);
  CheckContext ctx(CheckOptions{cfg.field, cfg.timeout_seconds, store.get()});
  set_jobs(cfg);
  std::map<std::string, Tally> tallies;
  for (const auto& id : params.statements) tallies[id];
  bool any_fail = false;
  ordered_sweep(
      graphs.size(), [&](std::size_t i) { return run_checks(graphs[i], params, ctx); },
      [&](const std::vector<CheckReport>& reports) {
        for (const auto& r : reports) {
          ++tallies[r.statement].counts[static_cast<int>(r.status)];
          if (r.status == Status::fail) any_fail = true;
          *sink << to_json(r).dump() << '\n';
        }
      });
  sink->flush();
  print_summary(tallies, graphs.size(), err);
  return any_fail ? kExitFail : kExitOk;
}

int cmd_encode(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  RunConfig local = cfg;
  local.edge_files.insert(local.edge_files.end(), cfg.positional.begin(), cfg.positional.end());
  const auto graphs = load_graphs(local);
  if (graphs.empty()) throw UsageError("no input graphs");
  std::ofstream file;
  std::ostream* sink = open_output(cfg, out, file);
  for (const Graph& g : graphs) *sink << encode_graph6(g) << '\n';
  sink->flush();
  (void)err;
  return kExitOk;
}

int cmd_decode(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  RunConfig local = cfg;
  std::vector<Graph> graphs = load_graphs(local);
  for (const auto& s : cfg.positional) graphs.push_back(decode_graph6(s));
  if (graphs.empty()) throw UsageError("no input graphs");
  std::ofstream file;
  std::ostream* sink = open_output(cfg, out, file);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0) *sink << '\n';
    *sink << format_edge_list(graphs[i]);
  }
  sink->flush();
  (void)err;
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic powers, regularity and statement checks for edge ideals of small graphs", "edgeal"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string s_text, k_text, statements_text;
  int exhaustive = 0;
  int characteristic = 0;

  auto add_sources = [&](CLI::App* sub) {
    sub->add_option("--exhaustive", exhaustive, "every graph on 1..N vertices up to isomorphism (N <= 8)");
    sub->add_option("--graph6", cfg.graph6_files, "file with one graph6 string per line ('-' for stdin)");
    sub->add_option("--edge-file", cfg.edge_files, "edge-list file: 'n' then one 'u v' per line");
    sub->add_option("--edges", cfg.inline_edges, "inline edge list such as \"1 2, 2 3\"");
    sub->add_option("--vertices", cfg.min_vertices, "vertex count for --edges when larger than the largest label");
    sub->add_option("--builtin", cfg.builtins, "cycle:N, path:N, complete:N, complete_bipartite:A,B, example42");
    sub->add_option("--graph", cfg.graph_specs, "builtin name (C5, K4, ...) or graph6 string");
    sub->add_option("--out", cfg.out_path, "output path (default: standard output)");
  };
  auto add_compute_opts = [&](CLI::App* sub) {
    sub->add_option("--s", s_text, "power range MIN..MAX or a single value (at most 5)");
    sub->add_option("--timeout", cfg.timeout_seconds, "seconds per regularity computation (0: unlimited)");
    sub->add_option("--jobs", cfg.jobs, "worker threads (default: all cores)");
    sub->add_option("--char", characteristic, "characteristic of the coefficient field: 0 or a prime");
    sub->add_flag("!--no-cache", cfg.use_cache, "do not read or write the result cache");
  };

  auto* compute = app.add_subcommand("compute", "regularities and invariants, one JSON line per graph");
  add_sources(compute);
  add_compute_opts(compute);
  compute->add_option("inputs", cfg.positional, "builtin names or graph6 strings");

  auto* verify = app.add_subcommand("verify", "run statement checks, one JSON line per instance");
  add_sources(verify);
  add_compute_opts(verify);
  verify->add_option("--statements", statements_text, "comma separated statement ids (default: all)");
  verify->add_option("--k", k_text, "range for k-indexed statements (default: the --s range)");
  verify->add_option("inputs", cfg.positional, "builtin names or graph6 strings");

  auto* encode = app.add_subcommand("encode", "print graph6 for each input graph");
  add_sources(encode);
  encode->add_option("inputs", cfg.positional, "edge-list files");

  auto* decode = app.add_subcommand("decode", "print each graph6 input as an edge list");
  add_sources(decode);
  decode->add_option("inputs", cfg.positional, "graph6 strings");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("edgeal");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (exhaustive != 0) cfg.exhaustive = exhaustive;
    if (!s_text.empty()) std::tie(cfg.s_min, cfg.s_max) = parse_range(s_text);
    if (!k_text.empty()) cfg.k_range = parse_range(k_text);
    if (!statements_text.empty()) {
      std::stringstream list(statements_text);
      std::string id;
      while (std::getline(list, id, ','))
        if (!id.empty() && id != "all") cfg.statements.push_back(id);
    }
    cfg.field = Field{characteristic};
    if (*compute) return cmd_compute(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*encode) return cmd_encode(cfg, out, err);
    if (*decode) return cmd_decode(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace edgeal::cli
