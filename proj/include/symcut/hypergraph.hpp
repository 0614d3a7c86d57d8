#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcut/oracle.hpp"

namespace symcut {

template <Weight W>
struct Hyperedge {
  W weight;
  std::vector<Element> pins;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

template <Weight W>
class Hypergraph {
 public:
  explicit Hypergraph(std::size_t n = 0) : incidence_(n) {}

  std::size_t vertex_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge<W>>& edges() const { return edges_; }
  const std::vector<std::size_t>& incident(Element v) const { return incidence_.at(v); }

  /// Throws std::invalid_argument on fewer than two pins, repeated or
  /// out-of-range pins, or a negative weight.
  void add_edge(W weight, std::vector<Element> pins) {
    if (pins.size() < 2) throw std::invalid_argument("hypergraph: hyperedge needs at least 2 pins");
    if (weight < W{0}) throw std::invalid_argument("hypergraph: negative weight");
    std::vector<Element> sorted = pins;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("hypergraph: repeated pin");
    }
    if (sorted.back() >= vertex_count()) {
      throw std::invalid_argument("hypergraph: pin " + std::to_string(sorted.back()) +
                                  " outside vertex range " + std::to_string(vertex_count()));
    }
    for (Element p : pins) incidence_[p].push_back(edges_.size());
    edges_.push_back({weight, std::move(pins)});
  }

  W total_weight() const {
    W sum{0};
    for (const auto& e : edges_) sum += e.weight;
    return sum;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Hyperedge<W>> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Total weight of hyperedges with at least one pin in S and one in T.
template <Weight W>
class HypergraphCutOracle final : public LaxOracle<W> {
 public:
  explicit HypergraphCutOracle(Hypergraph<W> h, bool early_exit = true)
      : h_(std::move(h)), early_exit_(early_exit) {}

  const Hypergraph<W>& hypergraph() const { return h_; }
  std::size_t ground_size() const override { return h_.vertex_count(); }

  Value<W> eval(const ElementSet& s, const ElementSet& t, Value<W> tau) const override {
    this->check_arguments(s, t);
    const ElementSet& walk = s.size() <= t.size() ? s : t;
    const ElementSet& other = s.size() <= t.size() ? t : s;
    W sum{0};
    if (early_exit_ && tau <= Value<W>(sum)) return tau;
    std::vector<std::uint8_t> seen(h_.edge_count(), 0);
    for (Element x : walk.members()) {
      for (std::size_t e : h_.incident(x)) {
        if (seen[e] != 0) continue;
        seen[e] = 1;
        const auto& pins = h_.edges()[e].pins;
        if (std::any_of(pins.begin(), pins.end(), [&](Element p) { return other.contains(p); })) {
          sum += h_.edges()[e].weight;
          if (early_exit_ && tau <= Value<W>(sum)) return tau;
        }
      }
    }
    return min(tau, Value<W>(sum));
  }
  using LaxOracle<W>::eval;

  std::optional<W> key_upper_bound() const override {
    if constexpr (std::is_integral_v<W>) {
      return h_.total_weight();
    } else {
      return std::nullopt;
    }
  }

 private:
  Hypergraph<W> h_;
  bool early_exit_;
};

}  // namespace symcut
