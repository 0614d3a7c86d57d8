#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "symcut/brute.hpp"
#include "symcut/instance_io.hpp"
#include "symcut/optimal_set.hpp"

namespace symcut {
namespace {

using namespace symcut::testing;

template <class T, class Variant>
const T& as(const Variant& v) {
  return std::get<T>(v);
}

TEST(ParseGraph, Triangle) {
  const auto parsed = parse_graph("3 3\n1 2 3\n1 3 1\n2 3 2\n");
  EXPECT_EQ(weight_mode(parsed), WeightMode::integer);
  EXPECT_EQ(as<WeightedGraph<I>>(parsed), triangle());
}

TEST(ParseGraph, TwoVertices) {
  const auto g = as<WeightedGraph<I>>(parse_graph("2 1\n1 2 5\n"));
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.total_weight(), 5);
}

TEST(ParseGraph, SelfLoopReportsLine) {
  try {
    parse_graph("2 1\n1 1 5\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseGraph, CommentsAndFloats) {
  const auto parsed = parse_graph("# a comment\n\n3 2\n1 2 0.5\n# mid\n2 3 1\n");
  EXPECT_EQ(weight_mode(parsed), WeightMode::floating);
  EXPECT_DOUBLE_EQ(as<WeightedGraph<double>>(parsed).total_weight(), 1.5);
}

TEST(ParseGraph, Malformed) {
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("3 2\n1 2 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n1 2 1\n2 3 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n1 4 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n1 2 -1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n1 2 x\n"), ParseError);
}

TEST(ParseHypergraph, OneEdge) {
  const auto h = as<Hypergraph<I>>(parse_hypergraph("3 1\n2 3 1 2 3\n"));
  ASSERT_EQ(h.edge_count(), 1u);
  EXPECT_EQ(h.edges()[0].weight, 2);
  EXPECT_EQ(h.edges()[0].pins, (std::vector<Element>{0, 1, 2}));
}

TEST(ParseHypergraph, Errors) {
  EXPECT_THROW(parse_hypergraph("3 1\n2 3 1 2\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("3 1\n2 1 1\n"), ParseError);
}

TEST(ParseTable, Basics) {
  const auto f = as<SetFunctionTable<I>>(parse_function_table("2\n0 0\n1 1\n2 1\n3 0\n"));
  EXPECT_EQ(f.values(), (std::vector<I>{0, 1, 1, 0}));
}

TEST(ParseTable, Errors) {
  try {
    parse_function_table("2\n0 0\n1 1\n2 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing subset"), std::string::npos);
  }
  EXPECT_THROW(parse_function_table("2\n0 0\n1 1\n1 1\n3 0\n"), ParseError);
}

TEST(Writers, RoundTrip) {
  const auto g = gen_random_graph({7, 0.5, 9, 5, false});
  EXPECT_EQ(as<WeightedGraph<I>>(parse_graph(write_graph(g))), g);
  const auto h = gen_random_hypergraph({6, 7, 4, 9, 5});
  EXPECT_EQ(as<Hypergraph<I>>(parse_hypergraph(write_hypergraph(h))), h);
  const auto f = gen_symmetric_submodular_table(4, 5, 5);
  EXPECT_EQ(as<SetFunctionTable<I>>(parse_function_table(write_function_table(f))), f);

  WeightedGraph<double> gd(3);
  gd.add_edge(0, 1, 2.0);
  gd.add_edge(1, 2, 0.25);
  const auto parsed = parse_graph(write_graph(gd));
  EXPECT_EQ(weight_mode(parsed), WeightMode::floating);
  EXPECT_EQ(as<WeightedGraph<double>>(parsed), gd);
}

TEST(Generators, CompleteGraphAtFullProbability) {
  const auto g = gen_random_graph({5, 1.0, 1, 17, false});
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_EQ(g.total_weight(), 10);
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(gen_random_graph({8, 0.4, 10, 7, false}), gen_random_graph({8, 0.4, 10, 7, false}));
  EXPECT_EQ(gen_random_hypergraph({6, 9, 3, 4, 2}), gen_random_hypergraph({6, 9, 3, 4, 2}));
  EXPECT_EQ(gen_symmetric_submodular_table(5, 4, 2), gen_symmetric_submodular_table(5, 4, 2));
}

TEST(Generators, CrossCheckOnSeededGraph) {
  const GraphCutOracle<I> d(gen_random_graph({8, 0.4, 10, 7, false}));
  EXPECT_EQ(optimal_set(d).value, brute_min_bipartition(d).best_value);
}

TEST(Generators, RejectsBadParameters) {
  EXPECT_THROW(gen_random_graph({1, 0.5, 1, 1, false}), std::invalid_argument);
  EXPECT_THROW(gen_random_graph({4, 0.0, 1, 1, false}), std::invalid_argument);
  EXPECT_THROW(gen_random_graph({4, 0.5, 0, 1, false}), std::invalid_argument);
}

TEST(Generators, ConnectedCorpus) {
  const CorpusParams corpus;
  for (std::size_t i = 0; i < 20; ++i) {
    const auto params = corpus_instance(corpus, i);
    EXPECT_EQ(params.n, corpus.min_n + i % (corpus.max_n - corpus.min_n + 1));
    const GraphCutOracle<I> d(gen_random_graph(params));
    EXPECT_GT(brute_min_bipartition(d).best_value, V(0));
  }
}

TEST(Generators, SymmetricSubmodularTables) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = check_symmetric_submodular(gen_symmetric_submodular_table(5, 6, seed));
    EXPECT_TRUE(r.symmetric && r.submodular) << r.witness;
  }
}

}  // namespace
}  // namespace symcut
