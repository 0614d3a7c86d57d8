#include "symcut/instance_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

namespace symcut {

const char* to_string(WeightMode mode) {
  return mode == WeightMode::integer ? "integer" : "float";
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

bool is_integer_literal(std::string_view tok) {
  std::int64_t value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

double parse_double(std::string_view tok, std::size_t line) {
  double value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    throw ParseError(line, "malformed weight '" + std::string(tok) + "'");
  }
  return value;
}

template <Weight W>
W parse_weight(std::string_view tok, std::size_t line) {
  if constexpr (std::is_integral_v<W>) {
    return parse_int<std::int64_t>(tok, line, "weight");
  } else {
    return parse_double(tok, line);
  }
}

struct Header {
  std::size_t n;
  std::size_t m;
  std::size_t line;
};

Header read_header(const std::vector<Line>& lines, const char* what) {
  if (lines.empty()) throw ParseError(1, std::string("empty ") + what + " file");
  const Line& h = lines.front();
  if (h.tokens.size() != 2) throw ParseError(h.number, "expected header 'n m'");
  Header out{parse_int<std::size_t>(h.tokens[0], h.number, "vertex count"),
             parse_int<std::size_t>(h.tokens[1], h.number, "edge count"), h.number};
  if (lines.size() - 1 < out.m) {
    const std::size_t last = lines.back().number;
    throw ParseError(last + 1, "expected " + std::to_string(out.m) + " edge lines, found " +
                                   std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > out.m) throw ParseError(lines[out.m + 1].number, "unexpected extra line");
  return out;
}

Element parse_vertex(std::string_view tok, std::size_t n, std::size_t line) {
  const auto id = parse_int<std::int64_t>(tok, line, "vertex id");
  if (id < 1 || static_cast<std::uint64_t>(id) > n) {
    throw ParseError(line, "vertex id " + std::string(tok) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<Element>(id - 1);
}

template <Weight W>
WeightedGraph<W> build_graph(const std::vector<Line>& lines, const Header& h) {
  WeightedGraph<W> g(h.n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3) throw ParseError(l.number, "expected 'u v w'");
    const Element u = parse_vertex(l.tokens[0], h.n, l.number);
    const Element v = parse_vertex(l.tokens[1], h.n, l.number);
    if (u == v) throw ParseError(l.number, "self-loop at vertex " + std::to_string(u + 1));
    const W w = parse_weight<W>(l.tokens[2], l.number);
    if (w < W{0}) throw ParseError(l.number, "negative weight");
    g.add_edge(u, v, w);
  }
  return g;
}

template <Weight W>
Hypergraph<W> build_hypergraph(const std::vector<Line>& lines, const Header& h) {
  Hypergraph<W> hg(h.n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() < 2) throw ParseError(l.number, "expected 'w k v1 ... vk'");
    const W w = parse_weight<W>(l.tokens[0], l.number);
    if (w < W{0}) throw ParseError(l.number, "negative weight");
    const auto k = parse_int<std::size_t>(l.tokens[1], l.number, "pin count");
    if (k < 2) throw ParseError(l.number, "hyperedge needs at least 2 pins");
    if (l.tokens.size() != k + 2) {
      throw ParseError(l.number, "pin count " + std::to_string(k) + " does not match " +
                                     std::to_string(l.tokens.size() - 2) + " listed pins");
    }
    std::vector<Element> pins;
    for (std::size_t j = 2; j < l.tokens.size(); ++j) pins.push_back(parse_vertex(l.tokens[j], h.n, l.number));
    try {
      hg.add_edge(w, std::move(pins));
    } catch (const std::invalid_argument& e) {
      throw ParseError(l.number, e.what());
    }
  }
  return hg;
}

template <Weight W>
SetFunctionTable<W> build_table(const std::vector<Line>& lines, std::size_t n) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<W> values(count);
  std::vector<std::uint8_t> seen(count, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'bitmask value'");
    const auto mask = parse_int<std::uint64_t>(l.tokens[0], l.number, "bitmask");
    if (mask >= count) throw ParseError(l.number, "bitmask " + std::to_string(mask) + " outside ground set");
    if (seen[mask]++ != 0) throw ParseError(l.number, "duplicate subset " + std::to_string(mask));
    values[mask] = parse_weight<W>(l.tokens[1], l.number);
  }
  for (std::size_t m = 0; m < count; ++m) {
    if (seen[m] == 0) {
      throw ParseError(lines.back().number + 1, "missing subset " + std::to_string(m));
    }
  }
  return SetFunctionTable<W>(n, std::move(values));
}

template <class F>
bool all_integral(const std::vector<Line>& lines, F&& weight_token) {
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tok = weight_token(lines[i]);
    if (tok && !is_integer_literal(*tok)) return false;
  }
  return true;
}

std::string format_weight(std::int64_t w) { return std::to_string(w); }

std::string format_weight(double w) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  std::string out(buf, ptr);
  // Keep the float mode visible so the file parses back as floats.
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

template <Weight W>
std::string write_graph_impl(const WeightedGraph<W>& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u + 1 << ' ' << e.v + 1 << ' ' << format_weight(e.weight) << '\n';
  return os.str();
}

template <Weight W>
std::string write_hypergraph_impl(const Hypergraph<W>& h) {
  std::ostringstream os;
  os << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    os << format_weight(e.weight) << ' ' << e.pins.size();
    for (Element p : e.pins) os << ' ' << p + 1;
    os << '\n';
  }
  return os.str();
}

template <Weight W>
std::string write_table_impl(const SetFunctionTable<W>& f) {
  std::ostringstream os;
  os << f.size() << '\n';
  for (std::size_t m = 0; m < f.values().size(); ++m) os << m << ' ' << format_weight(f.values()[m]) << '\n';
  return os.str();
}

// Uniform integer in [0, bound) from the raw 64-bit stream; the slight
// modulo bias is irrelevant for test corpora and keeps output portable.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool is_connected(const WeightedGraph<std::int64_t>& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Element> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(x)) {
      if (seen[inc.neighbor] == 0) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = read_header(lines, "graph");
  const bool integral = all_integral(lines, [](const Line& l) -> std::optional<std::string_view> {
    if (l.tokens.size() != 3) return std::nullopt;
    return l.tokens[2];
  });
  if (integral) return build_graph<std::int64_t>(lines, h);
  return build_graph<double>(lines, h);
}

AnyHypergraph parse_hypergraph(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = read_header(lines, "hypergraph");
  const bool integral = all_integral(lines, [](const Line& l) -> std::optional<std::string_view> {
    if (l.tokens.empty()) return std::nullopt;
    return l.tokens[0];
  });
  if (integral) return build_hypergraph<std::int64_t>(lines, h);
  return build_hypergraph<double>(lines, h);
}

AnyTable parse_function_table(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty table file");
  const Line& h = lines.front();
  if (h.tokens.size() != 1) throw ParseError(h.number, "expected header 'n'");
  const auto n = parse_int<std::size_t>(h.tokens[0], h.number, "element count");
  if (n > kMaxTableElements) {
    throw ParseError(h.number, "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxTableElements));
  }
  const bool integral = all_integral(lines, [](const Line& l) -> std::optional<std::string_view> {
    if (l.tokens.size() != 2) return std::nullopt;
    return l.tokens[1];
  });
  if (integral) return build_table<std::int64_t>(lines, n);
  return build_table<double>(lines, n);
}

std::string write_graph(const WeightedGraph<std::int64_t>& g) { return write_graph_impl(g); }
std::string write_graph(const WeightedGraph<double>& g) { return write_graph_impl(g); }
std::string write_hypergraph(const Hypergraph<std::int64_t>& h) { return write_hypergraph_impl(h); }
std::string write_hypergraph(const Hypergraph<double>& h) { return write_hypergraph_impl(h); }
std::string write_function_table(const SetFunctionTable<std::int64_t>& f) { return write_table_impl(f); }
std::string write_function_table(const SetFunctionTable<double>& f) { return write_table_impl(f); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

WeightedGraph<std::int64_t> gen_random_graph(const GraphGenParams& params) {
  if (params.n < 2) throw std::invalid_argument("gen_random_graph: n must be at least 2");
  if (!(params.edge_probability > 0.0 && params.edge_probability <= 1.0)) {
    throw std::invalid_argument("gen_random_graph: edge probability must be in (0, 1]");
  }
  if (params.max_weight < 1) throw std::invalid_argument("gen_random_graph: max weight must be at least 1");

  std::mt19937_64 rng(params.seed);
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    WeightedGraph<std::int64_t> g(params.n);
    for (Element u = 0; u < params.n; ++u) {
      for (Element v = u + 1; v < params.n; ++v) {
        if (draw_unit(rng) < params.edge_probability) {
          g.add_edge(u, v, 1 + static_cast<std::int64_t>(
                                   draw_below(rng, static_cast<std::uint64_t>(params.max_weight))));
        }
      }
    }
    if (!params.connected || is_connected(g)) return g;
  }
  throw std::runtime_error("gen_random_graph: no connected graph after " + std::to_string(kMaxAttempts) +
                           " draws; raise the edge probability");
}

Hypergraph<std::int64_t> gen_random_hypergraph(const HypergraphGenParams& params) {
  if (params.n < 2) throw std::invalid_argument("gen_random_hypergraph: n must be at least 2");
  if (params.max_pins < 2) throw std::invalid_argument("gen_random_hypergraph: max pins must be at least 2");
  if (params.max_weight < 1) throw std::invalid_argument("gen_random_hypergraph: max weight must be at least 1");

  std::mt19937_64 rng(params.seed);
  Hypergraph<std::int64_t> h(params.n);
  const std::size_t max_pins = std::min(params.max_pins, params.n);
  for (std::size_t e = 0; e < params.edges; ++e) {
    const std::size_t k = 2 + draw_below(rng, max_pins - 1);
    // Partial Fisher-Yates over the vertex ids.
    std::vector<Element> ids(params.n);
    std::iota(ids.begin(), ids.end(), Element{0});
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(ids[i], ids[i + draw_below(rng, params.n - i)]);
    }
    ids.resize(k);
    const auto w = 1 + static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(params.max_weight)));
    h.add_edge(w, std::move(ids));
  }
  return h;
}

SetFunctionTable<std::int64_t> gen_symmetric_submodular_table(std::size_t n, std::int64_t max_weight,
                                                              std::uint64_t seed) {
  if (n < 2 || n > kMaxTableElements) throw std::invalid_argument("gen_symmetric_submodular_table: bad n");
  const auto g = gen_random_graph({n, 0.5, max_weight, seed, false});
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const auto cap = static_cast<std::int64_t>(1 + draw_below(rng, n));
  const auto slope = static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(max_weight) + 1));
  const auto concave = [&](std::int64_t size) { return slope * std::min(size, cap); };

  return SetFunctionTable<std::int64_t>::from_function(n, [&](Mask a) {
    std::int64_t cut = 0;
    for (const auto& e : g.edges()) {
      if (((a >> e.u) & 1U) != ((a >> e.v) & 1U)) cut += e.weight;
    }
    const auto size = static_cast<std::int64_t>(std::popcount(a));
    const auto rest = static_cast<std::int64_t>(n) - size;
    // g(A) = cut(A) + h(|A|); f(A) = g(A) + g(V\A) = 2 cut(A) + h(|A|) + h(n-|A|).
    return 2 * cut + concave(size) + concave(rest);
  });
}

GraphGenParams corpus_instance(const CorpusParams& corpus, std::size_t index) {
  if (corpus.min_n < 2 || corpus.max_n < corpus.min_n) throw std::invalid_argument("corpus: bad size range");
  const std::size_t span = corpus.max_n - corpus.min_n + 1;
  return {corpus.min_n + index % span, corpus.edge_probability, corpus.max_weight, corpus.seed + index, true};
}

}  // namespace symcut
