#pragma once

#include <cstdint>
#include <initializer_list>
#include <tuple>

#include "symcut/graph.hpp"

namespace symcut::testing {

using I = std::int64_t;
using V = Value<I>;

inline WeightedGraph<I> make_graph(std::size_t n, std::initializer_list<std::tuple<Element, Element, I>> edges) {
  WeightedGraph<I> g(n);
  for (auto [u, v, w] : edges) g.add_edge(u, v, w);
  return g;
}

// w(1,2)=3, w(1,3)=1, w(2,3)=2 with 0-based ids.
inline WeightedGraph<I> triangle() { return make_graph(3, {{0, 1, 3}, {0, 2, 1}, {1, 2, 2}}); }

inline ElementSet set_of(std::size_t n, std::initializer_list<Element> xs) {
  ElementSet s(n);
  for (auto x : xs) s.insert(x);
  return s;
}

}  // namespace symcut::testing
