#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcut/element_set.hpp"
#include "symcut/oracle.hpp"
#include "symcut/partition.hpp"
#include "symcut/threshold_queue.hpp"
#include "symcut/value.hpp"

namespace symcut {

/// An ordering v_1..v_k of the classes of a partition together with the
/// back key of each class. keys[0] is +inf; for i >= 1,
/// keys[i] = min{threshold, d([v_i], [v_0] u ... u [v_{i-1}])}.
template <Weight W>
struct LaxBackOrder {
  std::vector<ClassIndex> order;
  std::vector<Value<W>> keys;
  Value<W> threshold = Value<W>::infinity();

  std::size_t size() const { return order.size(); }
};

template <Weight W>
struct OrderBuild {
  LaxBackOrder<W> order;
  /// eval() calls for the scan builder, key refreshes for the queue builder.
  std::size_t oracle_calls = 0;
};

namespace detail {

inline void check_first(const Partition& partition, ClassIndex first) {
  if (partition.class_count() == 0) throw std::invalid_argument("lax-back order: empty partition");
  if (first >= partition.class_count()) {
    throw std::invalid_argument("lax-back order: first class " + std::to_string(first) +
                                " out of range (class count " +
                                std::to_string(partition.class_count()) + ")");
  }
}

}  // namespace detail

/// Builds a lax-back order by repeated scans over the unordered classes.
///
/// Each scan evaluates every remaining class against the current prefix.
/// A class whose lax value reaches tau is appended immediately, and later
/// candidates of the same scan see the enlarged prefix. If no class reached
/// tau, the class with the largest value (lowest index on ties) is appended
/// after the scan. At most k(k-1)/2 oracle calls for k classes.
template <Weight W>
OrderBuild<W> lax_back_order_scan(const LaxOracle<W>& oracle, const Partition& partition,
                                  Value<W> tau, ClassIndex first) {
  detail::check_first(partition, first);
  const std::size_t k = partition.class_count();

  std::vector<ElementSet> class_sets;
  class_sets.reserve(k);
  for (ClassIndex c = 0; c < k; ++c) class_sets.push_back(partition.class_set(c));

  OrderBuild<W> out;
  out.order.threshold = tau;
  out.order.order.reserve(k);
  out.order.keys.reserve(k);

  ElementSet prefix(partition.ground_size());
  auto append = [&](ClassIndex c, Value<W> key) {
    out.order.order.push_back(c);
    out.order.keys.push_back(key);
    prefix.insert_all(class_sets[c]);
  };
  append(first, Value<W>::infinity());

  std::vector<ClassIndex> remaining;
  remaining.reserve(k - 1);
  for (ClassIndex c = 0; c < k; ++c) {
    if (c != first) remaining.push_back(c);
  }

  std::vector<ClassIndex> kept;
  while (!remaining.empty()) {
    kept.clear();
    bool reached = false;
    std::size_t best_pos = 0;
    Value<W> best = Value<W>::negative_infinity();

    for (ClassIndex c : remaining) {
      const Value<W> lax = oracle.eval(class_sets[c], prefix, tau);
      ++out.oracle_calls;
      if (lax >= tau) {
        append(c, lax);
        reached = true;
        continue;
      }
      if (!reached && (kept.empty() || best < lax)) {
        best = lax;
        best_pos = kept.size();
      }
      kept.push_back(c);
    }

    if (!reached) {
      append(kept[best_pos], best);
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(best_pos));
    }
    remaining.swap(kept);
  }
  return out;
}

/// Builds a lax-back order with a thresholded priority queue and the
/// oracle's incremental key protocol. Throws CapabilityError if the oracle
/// is not keyed or the requested queue kind is unsupported.
template <Weight W>
OrderBuild<W> lax_back_order_queue(const LaxOracle<W>& oracle, const Partition& partition,
                                   Value<W> tau, ClassIndex first, QueueKind kind) {
  detail::check_first(partition, first);
  auto tracker = oracle.make_key_tracker(partition);
  if (!tracker) throw CapabilityError("queue builder: oracle does not support incremental keys");
  auto queue = make_queue<W>(kind, tau, oracle.key_upper_bound());

  const std::size_t k = partition.class_count();
  OrderBuild<W> out;
  out.order.threshold = tau;
  out.order.order.reserve(k);
  out.order.keys.reserve(k);

  std::vector<ClassIndex> changed;
  out.order.order.push_back(first);
  out.order.keys.push_back(Value<W>::infinity());
  tracker->append(first, changed);
  out.oracle_calls += changed.size();

  for (ClassIndex c = 0; c < k; ++c) {
    if (c != first) queue->insert(c, tracker->key(c));
  }

  while (!queue->empty()) {
    const ClassIndex v = queue->del_max().first;
    out.order.order.push_back(v);
    out.order.keys.push_back(min(tau, tracker->key(v)));
    changed.clear();
    tracker->append(v, changed);
    out.oracle_calls += changed.size();
    for (ClassIndex c : changed) {
      if (queue->contains(c)) queue->update_key(c, tracker->key(c));
    }
  }
  return out;
}

}  // namespace symcut
