#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcut/oracle.hpp"

namespace symcut {

template <Weight W>
struct Edge {
  Element u;
  Element v;
  W weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph with nonnegative edge weights. Parallel edges are merged
/// into one edge carrying the summed weight; self-loops are rejected.
template <Weight W>
class WeightedGraph {
 public:
  struct Incidence {
    Element neighbor;
    std::size_t edge;
  };

  explicit WeightedGraph(std::size_t n = 0) : adjacency_(n) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge<W>>& edges() const { return edges_; }
  const std::vector<Incidence>& incident(Element v) const { return adjacency_.at(v); }
  W weight(std::size_t edge) const { return edges_[edge].weight; }

  /// Throws std::invalid_argument on a self-loop, an endpoint outside the
  /// vertex range or a negative weight.
  void add_edge(Element u, Element v, W weight) {
    if (u >= vertex_count() || v >= vertex_count()) {
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") outside vertex range " + std::to_string(vertex_count()));
    }
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (weight < W{0}) throw std::invalid_argument("graph: negative edge weight");
    const auto key = std::minmax(u, v);
    if (auto it = index_.find(key); it != index_.end()) {
      edges_[it->second].weight += weight;
      return;
    }
    index_.emplace(key, edges_.size());
    adjacency_[u].push_back({v, edges_.size()});
    adjacency_[v].push_back({u, edges_.size()});
    edges_.push_back({u, v, weight});
  }

  W total_weight() const {
    W sum{0};
    for (const auto& e : edges_) sum += e.weight;
    return sum;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge<W>> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::map<std::pair<Element, Element>, std::size_t> index_;
};

/// Incremental back keys for the graph cut function: appending class C adds
/// the weight of every edge between C and an unordered class to that class's key.
template <Weight W>
class GraphKeyTracker final : public KeyTracker<W> {
 public:
  GraphKeyTracker(const WeightedGraph<W>& graph, const Partition& partition)
      : graph_(&graph),
        class_of_(partition.ground_size()),
        members_(partition.class_count()),
        keys_(partition.class_count(), W{0}),
        in_prefix_(partition.class_count(), 0),
        touched_(partition.class_count(), 0) {
    for (Element e = 0; e < partition.ground_size(); ++e) class_of_[e] = partition.class_of(e);
    for (ClassIndex c = 0; c < partition.class_count(); ++c) {
      auto m = partition.members(c);
      members_[c].assign(m.begin(), m.end());
    }
  }

  Value<W> key(ClassIndex c) const override { return keys_.at(c); }

  void append(ClassIndex c, std::vector<ClassIndex>& changed) override {
    if (in_prefix_.at(c) != 0) throw std::logic_error("GraphKeyTracker: class appended twice");
    in_prefix_[c] = 1;
    const std::size_t first_new = changed.size();
    for (Element x : members_[c]) {
      for (const auto& inc : graph_->incident(x)) {
        const ClassIndex other = class_of_[inc.neighbor];
        if (in_prefix_[other] != 0) continue;
        keys_[other] += graph_->weight(inc.edge);
        if (touched_[other] == 0) {
          touched_[other] = 1;
          changed.push_back(other);
        }
      }
    }
    for (std::size_t i = first_new; i < changed.size(); ++i) touched_[changed[i]] = 0;
  }

 private:
  const WeightedGraph<W>* graph_;
  std::vector<ClassIndex> class_of_;
  std::vector<std::vector<Element>> members_;
  std::vector<W> keys_;
  std::vector<std::uint8_t> in_prefix_;
  std::vector<std::uint8_t> touched_;
};

/// w(S, T): total weight of edges with one endpoint in S and the other in T.
///
/// Walks the adjacency of the smaller side. With early exit enabled (the
/// default) the walk stops as soon as the running sum reaches tau.
template <Weight W>
class GraphCutOracle final : public LaxOracle<W> {
 public:
  explicit GraphCutOracle(WeightedGraph<W> graph, bool early_exit = true)
      : graph_(std::move(graph)), early_exit_(early_exit) {}

  const WeightedGraph<W>& graph() const { return graph_; }
  std::size_t ground_size() const override { return graph_.vertex_count(); }

  Value<W> eval(const ElementSet& s, const ElementSet& t, Value<W> tau) const override {
    this->check_arguments(s, t);
    const bool s_smaller = s.size() <= t.size();
    const ElementSet& walk = s_smaller ? s : t;
    const ElementSet& other = s_smaller ? t : s;
    W sum{0};
    if (early_exit_ && tau <= Value<W>(sum)) return tau;
    for (Element x : walk.members()) {
      for (const auto& inc : graph_.incident(x)) {
        if (!other.contains(inc.neighbor)) continue;
        sum += graph_.weight(inc.edge);
        if (early_exit_ && tau <= Value<W>(sum)) return tau;
      }
    }
    return min(tau, Value<W>(sum));
  }
  using LaxOracle<W>::eval;

  bool keyed() const override { return true; }
  std::unique_ptr<KeyTracker<W>> make_key_tracker(const Partition& partition) const override {
    if (partition.ground_size() != ground_size()) {
      throw std::invalid_argument("GraphCutOracle: partition over a different ground set");
    }
    return std::make_unique<GraphKeyTracker<W>>(graph_, partition);
  }

  std::optional<W> key_upper_bound() const override {
    if constexpr (std::is_integral_v<W>) {
      return graph_.total_weight();
    } else {
      return std::nullopt;
    }
  }

 private:
  WeightedGraph<W> graph_;
  bool early_exit_;
};

}  // namespace symcut
