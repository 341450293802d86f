#include "edgeal/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace edgeal {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view line) {
  std::size_t base = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) base = header.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::string_view body = line.substr(base);
  if (body.empty()) throw ParseError("graph6: empty input", base);
  int first = static_cast<unsigned char>(body[0]);
  if (first == 126) throw ParseError("graph6: orders above 62 are not supported", base);
  if (first < 63 || first > 126) throw ParseError("graph6: invalid size byte", base);
  const int n = first - 63;
  if (n < 1 || n > kMaxVertices)
    throw ParseError("graph6: order " + std::to_string(n) + " outside 1..32", base);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (body.size() - 1 != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, found " +
                         std::to_string(body.size() - 1),
                     base + std::min(body.size(), expected + 1));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t pos = 1 + k / 6;
      int c = static_cast<unsigned char>(body[pos]);
      if (c < 63 || c > 126) throw ParseError("graph6: invalid data byte", base + pos);
      if (((c - 63) >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    std::size_t pos = body.size() - 1;
    int c = static_cast<unsigned char>(body[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid data byte", base + pos);
    int pad = static_cast<int>(6 - bits % 6);
    if (((c - 63) & ((1 << pad) - 1)) != 0)
      throw ParseError("graph6: nonzero padding bits", base + pos);
  }
  return Graph(n, edges);
}

namespace {

int parse_int(std::string_view text, std::size_t offset) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("expected an integer, got '" + std::string(text) + "'", offset);
  return value;
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_ints(std::string_view text, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == ';') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
           text[j] != ',' && text[j] != ';')
      ++j;
    out.push_back({text.substr(i, j - i), base + i});
    i = j;
  }
  return out;
}

Edge make_edge(int a, int b, int n, std::size_t offset) {
  if (a < 1 || b < 1 || a > n || b > n)
    throw ParseError("vertex label out of range 1.." + std::to_string(n), offset);
  if (a == b) throw ParseError("loop at vertex " + std::to_string(a), offset);
  return {std::min(a, b) - 1, std::max(a, b) - 1};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (const Token& t : split_ints(line, line_start)) tokens.push_back(t);
    line_start = line_end + 1;
  }
  if (tokens.empty()) throw ParseError("edge list: missing vertex count", 0);
  const int n = parse_int(tokens[0].text, tokens[0].offset);
  if (n < 1 || n > kMaxVertices)
    throw ParseError("edge list: vertex count outside 1..32", tokens[0].offset);
  if ((tokens.size() - 1) % 2 != 0)
    throw ParseError("edge list: dangling endpoint", tokens.back().offset);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    int a = parse_int(tokens[i].text, tokens[i].offset);
    int b = parse_int(tokens[i + 1].text, tokens[i + 1].offset);
    edges.push_back(make_edge(a, b, n, tokens[i].offset));
  }
  return Graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

Graph parse_inline_edges(std::string_view text, int min_order) {
  auto tokens = split_ints(text, 0);
  if (tokens.size() % 2 != 0) throw ParseError("edges: dangling endpoint", tokens.back().offset);
  std::vector<int> labels;
  for (const Token& t : tokens) labels.push_back(parse_int(t.text, t.offset));
  int n = std::max(min_order, 1);
  for (int v : labels) n = std::max(n, v);
  if (n > kMaxVertices) throw ParseError("edges: more than 32 vertices", 0);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); i += 2)
    edges.push_back(make_edge(labels[i], labels[i + 1], n, tokens[i].offset));
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  es.push_back({0, n - 1});
  return Graph(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, es);
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs two positive sides");
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.push_back({i, a + j});
  return Graph(a + b, es);
}

Graph example42_graph() {
  return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
}

std::vector<Graph> builtin_family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "cycle") {
    need(1);
    return {cycle_graph(params[0])};
  }
  if (name == "path") {
    need(1);
    return {path_graph(params[0])};
  }
  if (name == "complete") {
    need(1);
    return {complete_graph(params[0])};
  }
  if (name == "complete_bipartite") {
    need(2);
    return {complete_bipartite_graph(params[0], params[1])};
  }
  if (name == "example42") {
    need(0);
    return {example42_graph()};
  }
  throw std::invalid_argument("unknown builtin family '" + name + "'");
}

namespace {

std::vector<int> parse_param_list(const std::string& text) {
  std::vector<int> out;
  for (const Token& t : split_ints(text, 0)) out.push_back(parse_int(t.text, t.offset));
  return out;
}

}  // namespace

std::vector<Graph> builtin_from_spec(const std::string& spec) {
  if (spec == "example42") return builtin_family("example42", {});
  std::string name;
  std::string rest;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    rest = spec.substr(colon + 1);
  } else if (spec.size() >= 2 && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    // Short aliases.
    switch (spec[0]) {
      case 'C': name = "cycle"; break;
      case 'P': name = "path"; break;
      case 'K': name = spec.find(',') != std::string::npos ? "complete_bipartite" : "complete"; break;
      default: throw std::invalid_argument("unknown builtin graph '" + spec + "'");
    }
    rest = spec.substr(1);
  } else {
    throw std::invalid_argument("unknown builtin graph '" + spec + "'");
  }
  if (auto dots = rest.find(".."); dots != std::string::npos) {
    int lo = parse_int(rest.substr(0, dots), 0);
    int hi = parse_int(rest.substr(dots + 2), dots + 2);
    std::vector<Graph> out;
    for (int k = lo; k <= hi; ++k) {
      auto part = builtin_family(name, {k});
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  return builtin_family(name, parse_param_list(rest));
}

}  // namespace edgeal
