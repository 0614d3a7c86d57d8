#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "symcut/graph.hpp"
#include "symcut/hypergraph.hpp"
#include "symcut/set_function.hpp"

// Line-oriented instance files. Vertex ids are 1-based in files and 0-based
// in memory. Lines starting with '#' and blank lines are skipped.
//
//   graph:       "n m", then m lines "u v w"
//   hypergraph:  "n m", then m lines "w k v1 ... vk"
//   table:       "n",   then 2^n lines "bitmask value"
//
// Weights are read as 64-bit integers when every weight token is an
// integer literal, otherwise as doubles.

namespace symcut {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class WeightMode { integer, floating };

const char* to_string(WeightMode mode);

using AnyGraph = std::variant<WeightedGraph<std::int64_t>, WeightedGraph<double>>;
using AnyHypergraph = std::variant<Hypergraph<std::int64_t>, Hypergraph<double>>;
using AnyTable = std::variant<SetFunctionTable<std::int64_t>, SetFunctionTable<double>>;

template <class Variant>
WeightMode weight_mode(const Variant& v) {
  return v.index() == 0 ? WeightMode::integer : WeightMode::floating;
}

AnyGraph parse_graph(std::string_view text);
AnyHypergraph parse_hypergraph(std::string_view text);
AnyTable parse_function_table(std::string_view text);

std::string write_graph(const WeightedGraph<std::int64_t>& g);
std::string write_graph(const WeightedGraph<double>& g);
std::string write_hypergraph(const Hypergraph<std::int64_t>& h);
std::string write_hypergraph(const Hypergraph<double>& h);
std::string write_function_table(const SetFunctionTable<std::int64_t>& f);
std::string write_function_table(const SetFunctionTable<double>& f);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

// Seeded generators. Output depends only on the arguments: the random
// stream is mt19937_64 consumed through fixed integer arithmetic.

struct GraphGenParams {
  std::size_t n = 0;
  double edge_probability = 0.5;
  std::int64_t max_weight = 1;
  std::uint64_t seed = 0;
  /// Redraw until the graph is connected.
  bool connected = false;
};

/// Integer weights in [1, max_weight]. Throws std::invalid_argument for
/// n < 2, p outside (0, 1] or max_weight < 1.
WeightedGraph<std::int64_t> gen_random_graph(const GraphGenParams& params);

struct HypergraphGenParams {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t max_pins = 3;
  std::int64_t max_weight = 1;
  std::uint64_t seed = 0;
};

Hypergraph<std::int64_t> gen_random_hypergraph(const HypergraphGenParams& params);

/// f(A) = g(A) + g(V\A) with g = (random graph cut) + (concave function of
/// |A|): symmetric and submodular by construction.
SetFunctionTable<std::int64_t> gen_symmetric_submodular_table(std::size_t n, std::int64_t max_weight,
                                                              std::uint64_t seed);

/// A reproducible family of connected random graphs: instance i has
/// min_n + (i mod (max_n - min_n + 1)) vertices and seed `seed + i`.
struct CorpusParams {
  std::size_t count = 200;
  std::size_t min_n = 3;
  std::size_t max_n = 8;
  double edge_probability = 0.5;
  std::int64_t max_weight = 10;
  std::uint64_t seed = 1;
};

GraphGenParams corpus_instance(const CorpusParams& corpus, std::size_t index);

}  // namespace symcut
