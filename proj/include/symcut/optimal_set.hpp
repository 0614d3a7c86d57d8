#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcut/element_set.hpp"
#include "symcut/lax_back_order.hpp"
#include "symcut/oracle.hpp"
#include "symcut/partition.hpp"
#include "symcut/round_checks.hpp"
#include "symcut/threshold_queue.hpp"
#include "symcut/value.hpp"

namespace symcut {

/// laxback: orders are built with the current best value as threshold and
/// every run of keys >= tau is contracted. maxback: orders are built with
/// an infinite threshold and only the last pair is contracted per round.
enum class Algorithm { laxback, maxback };
enum class OrderBuilder { scan, queue };
enum class InitThreshold { infinity, min_singleton };

struct MinimizeConfig {
  Algorithm algorithm = Algorithm::laxback;
  OrderBuilder order_builder = OrderBuilder::scan;
  InitThreshold init_threshold = InitThreshold::infinity;
  /// Each order starts at the class containing this element; class 0 if unset.
  std::optional<Element> first_element;
  /// Only consulted by the queue builder; bucket needs integer weights.
  QueueKind queue_kind = QueueKind::heap;
  /// Cross-check the loop invariant and contraction safety by brute force
  /// after every round. Ignored when |V| > kDebugCheckMaxElements.
  bool debug_checks = false;
};

inline constexpr std::size_t kDebugCheckMaxElements = 12;

template <Weight W>
struct RunStats {
  std::size_t rounds = 0;
  /// Oracle evaluations plus incremental key refreshes, all rounds.
  std::size_t oracle_calls = 0;
  /// Evaluations spent on the min-singleton initial threshold.
  std::size_t init_calls = 0;
  std::vector<std::size_t> joins_per_round;
  std::vector<std::size_t> calls_per_round;
  std::vector<std::size_t> classes_per_round;
  Value<W> final_value = Value<W>::infinity();

  std::size_t joins_total() const {
    std::size_t sum = 0;
    for (auto j : joins_per_round) sum += j;
    return sum;
  }
};

template <Weight W>
struct MinimizeResult {
  ElementSet set;
  Value<W> value;
  RunStats<W> stats;
};

template <Weight W>
using RoundObserver = std::function<void(const RoundRecord<W>&)>;

/// Joins [v_{i-1}] and [v_i] for every i >= 1 with keys[i] >= tau. Runs of
/// consecutive qualifying positions collapse into one class. Returns the
/// number of joins.
template <Weight W>
std::size_t contract_round(Partition& partition, const LaxBackOrder<W>& order, Value<W> tau) {
  const std::size_t k = order.size();
  if (k != partition.class_count() || order.keys.size() != k) {
    throw std::invalid_argument("contract_round: order does not match the partition");
  }
  // Class indices shift during joins; track each class by its first member.
  std::vector<Element> rep(k);
  for (std::size_t i = 0; i < k; ++i) rep[i] = partition.members(order.order[i]).front();

  std::size_t joins = 0;
  for (std::size_t i = 1; i < k; ++i) {
    if (order.keys[i] >= tau) {
      partition.join(partition.class_of(rep[i - 1]), partition.class_of(rep[i]));
      ++joins;
    }
  }
  return joins;
}

namespace detail {

template <Weight W>
void validate_config(const LaxOracle<W>& oracle, const MinimizeConfig& config) {
  if (config.first_element && *config.first_element >= oracle.ground_size()) {
    throw std::invalid_argument("optimal_set: first element out of range");
  }
  if (config.queue_kind == QueueKind::bucket) {
    if constexpr (!std::is_integral_v<W>) {
      throw CapabilityError("bucket queue requires integer weights");
    }
    if (!oracle.key_upper_bound()) {
      throw CapabilityError("bucket queue requires an oracle with a nonnegative integer key bound");
    }
  }
  if (config.order_builder == OrderBuilder::queue && !oracle.keyed()) {
    throw CapabilityError("queue builder requires an oracle with incremental keys");
  }
}

}  // namespace detail

/// Finds a nontrivial S minimizing d(S, V\S) for a monotone, consistent
/// symmetric set function given by its lax oracle.
///
/// Throws std::invalid_argument for |V| < 2 and CapabilityError for a
/// configuration the oracle cannot support. Oracle exceptions propagate.
template <Weight W>
MinimizeResult<W> optimal_set(const LaxOracle<W>& oracle, const MinimizeConfig& config = {},
                              const RoundObserver<W>& observer = {}) {
  const std::size_t n = oracle.ground_size();
  if (n < 2) throw std::invalid_argument("optimal_set: ground set needs at least 2 elements");
  detail::validate_config(oracle, config);

  MinimizeResult<W> result{ElementSet(n), Value<W>::infinity(), {}};
  auto& stats = result.stats;
  Value<W> tau = Value<W>::infinity();

  if (config.init_threshold == InitThreshold::min_singleton) {
    for (Element v = 0; v < n; ++v) {
      ElementSet single(n, {v});
      const Value<W> value = oracle.eval(single, single.complement());
      ++stats.init_calls;
      if (value < tau) {
        tau = value;
        result.set = std::move(single);
      }
    }
    stats.oracle_calls += stats.init_calls;
  }

  std::optional<RoundChecker<W>> debug;
  if (config.debug_checks && n <= kDebugCheckMaxElements) {
    debug.emplace(oracle, kDebugCheckMaxElements, kDebugCheckMaxElements);
    debug->enable_only({RoundProperty::loop_invariant, RoundProperty::contraction_safety});
  }

  Partition partition(n);
  while (partition.class_count() >= 2) {
    const std::size_t k = partition.class_count();
    const ClassIndex first = config.first_element ? partition.class_of(*config.first_element) : 0;
    const Value<W> build_tau = config.algorithm == Algorithm::maxback ? Value<W>::infinity() : tau;

    OrderBuild<W> built = config.order_builder == OrderBuilder::scan
                              ? lax_back_order_scan(oracle, partition, build_tau, first)
                              : lax_back_order_queue(oracle, partition, build_tau, first,
                                                     config.queue_kind);
    const auto& order = built.order;

    // The last key is min{build_tau, d([v_k], V\[v_k])}.
    const Value<W> tau_before = tau;
    if (order.keys.back() < tau) {
      tau = order.keys.back();
      result.set = partition.class_set(order.order.back());
    }

    std::optional<Partition> before;
    if (observer || debug) before = partition;

    std::size_t joins = 0;
    if (config.algorithm == Algorithm::maxback) {
      const Element a = partition.members(order.order[k - 2]).front();
      const Element b = partition.members(order.order[k - 1]).front();
      partition.join(partition.class_of(a), partition.class_of(b));
      joins = 1;
    } else {
      joins = contract_round(partition, order, tau);
    }
    if (joins == 0) throw std::logic_error("optimal_set: round made no progress");

    stats.joins_per_round.push_back(joins);
    stats.calls_per_round.push_back(built.oracle_calls);
    stats.classes_per_round.push_back(k);
    stats.oracle_calls += built.oracle_calls;

    if (observer || debug) {
      const RoundRecord<W> rec{stats.rounds, *before, order, tau_before, tau, result.set, partition, joins};
      if (observer) observer(rec);
      if (debug) {
        debug->check(rec);
        if (!debug->tally().ok()) {
          throw std::logic_error("optimal_set: debug check failed: " + debug->tally().messages.front());
        }
      }
    }
    ++stats.rounds;
  }

  if (result.set.empty()) throw std::logic_error("optimal_set: oracle never returned a finite value");
  result.value = tau;
  stats.final_value = tau;
  return result;
}

}  // namespace symcut
