#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symcut/brute.hpp"
#include "symcut/lax_back_order.hpp"
#include "symcut/oracle.hpp"
#include "symcut/partition.hpp"

namespace symcut {

/// Snapshot of one round of the minimizer, handed to observers after the
/// contraction step. All references are valid only during the callback.
template <Weight W>
struct RoundRecord {
  std::size_t round;
  const Partition& before;
  const LaxBackOrder<W>& order;
  Value<W> tau_before;
  Value<W> tau_after;
  const ElementSet& best_set;
  const Partition& after;
  std::size_t joins;
};

/// Brute-force-backed properties checked per round.
enum class RoundProperty : std::size_t {
  order_validity,      // the order is a lax-back order for its threshold
  tau_good_last_pair,  // min{tau, d([v_k], rest)} = min{tau, lambda([v_k], [v_k-1])}
  pair_lambda_bound,   // min{tau, lambda([v_i-1], [v_i])} >= keys[i]
  contraction_safety,  // min{tau, lambda} is unchanged by the contraction
  lambda_triangle,     // lambda(u, w) >= min{lambda(u, v), lambda(v, w)}
  loop_invariant,      // lambda <= tau = d(S, V\S), joined elements have lambda >= tau
};

inline constexpr std::size_t kRoundPropertyCount = 6;

inline const char* to_string(RoundProperty p) {
  switch (p) {
    case RoundProperty::order_validity: return "order_validity";
    case RoundProperty::tau_good_last_pair: return "tau_good_last_pair";
    case RoundProperty::pair_lambda_bound: return "pair_lambda_bound";
    case RoundProperty::contraction_safety: return "contraction_safety";
    case RoundProperty::lambda_triangle: return "lambda_triangle";
    case RoundProperty::loop_invariant: return "loop_invariant";
  }
  return "unknown";
}

struct PropertyTally {
  std::array<std::size_t, kRoundPropertyCount> checked{};
  std::array<std::size_t, kRoundPropertyCount> violations{};
  std::vector<std::string> messages;  // first few violations, for reporting

  std::size_t total_violations() const {
    std::size_t sum = 0;
    for (auto v : violations) sum += v;
    return sum;
  }
  bool ok() const { return total_violations() == 0; }
};

/// Checks the per-round properties of the minimizer against exhaustive
/// enumeration. Class-level properties are checked while the partition has
/// at most `max_classes` classes; the loop invariant needs the pairwise
/// lambda table of the original ground set and is checked when
/// |V| <= `max_elements`.
template <Weight W>
class RoundChecker {
 public:
  explicit RoundChecker(const LaxOracle<W>& oracle, std::size_t max_classes = 8,
                        std::size_t max_elements = 12)
      : oracle_(&oracle), max_classes_(max_classes) {
    for (std::size_t i = 0; i < kRoundPropertyCount; ++i) enabled_[i] = true;
    const std::size_t n = oracle.ground_size();
    if (n >= 2 && n <= max_elements) {
      lambda_ = brute_min_bipartition(oracle).best_value;
      pair_lambda_ = brute_lambda_matrix(oracle);
    }
  }

  void enable_only(std::initializer_list<RoundProperty> props) {
    enabled_.fill(false);
    for (auto p : props) enabled_[static_cast<std::size_t>(p)] = true;
  }

  const PropertyTally& tally() const { return tally_; }

  void operator()(const RoundRecord<W>& rec) { check(rec); }

  void check(const RoundRecord<W>& rec) {
    const std::size_t k = rec.before.class_count();
    if (k >= 2 && k <= max_classes_) check_class_level(rec);
    if (lambda_) check_loop_invariant(rec);
  }

 private:
  bool on(RoundProperty p) const { return enabled_[static_cast<std::size_t>(p)]; }

  void record(RoundProperty p, bool ok, const std::string& detail) {
    const auto i = static_cast<std::size_t>(p);
    ++tally_.checked[i];
    if (ok) return;
    ++tally_.violations[i];
    if (tally_.messages.size() < 20) tally_.messages.push_back(std::string(to_string(p)) + ": " + detail);
  }

  static Value<W> min_bipartition_or_inf(const LaxOracle<W>& induced) {
    if (induced.ground_size() < 2) return Value<W>::infinity();
    return brute_min_bipartition(induced).best_value;
  }

  void check_class_level(const RoundRecord<W>& rec) {
    const InducedOracle<W> induced(*oracle_, rec.before);
    const auto& order = rec.order;
    const std::size_t k = order.size();
    const Value<W> tau = order.threshold;
    const std::string where = "round " + std::to_string(rec.round) + ": ";

    if (on(RoundProperty::order_validity)) {
      const auto report = verify_lax_back_order(*oracle_, rec.before, order);
      record(RoundProperty::order_validity, report.ok, where + report.witness);
    }

    const auto lambda = brute_lambda_matrix(induced);

    if (on(RoundProperty::tau_good_last_pair)) {
      const ClassIndex last = order.order[k - 1];
      const ClassIndex prev = order.order[k - 2];
      ElementSet single(k, {last});
      const Value<W> lhs = min(tau, induced.eval(single, single.complement()));
      const Value<W> rhs = min(tau, lambda[last][prev]);
      record(RoundProperty::tau_good_last_pair, values_match(lhs, rhs),
             where + "d(last, rest)=" + lhs.str() + " lambda(last, prev)=" + rhs.str());
    }

    if (on(RoundProperty::pair_lambda_bound)) {
      for (std::size_t i = 1; i < k; ++i) {
        const Value<W> bound = min(tau, lambda[order.order[i - 1]][order.order[i]]);
        record(RoundProperty::pair_lambda_bound, value_at_least(bound, order.keys[i]),
               where + "position " + std::to_string(i) + " lambda=" + bound.str() +
                   " key=" + order.keys[i].str());
      }
    }

    if (on(RoundProperty::lambda_triangle)) {
      bool ok = true;
      std::string detail;
      for (std::size_t u = 0; u < k && ok; ++u) {
        for (std::size_t v = 0; v < k && ok; ++v) {
          for (std::size_t w = 0; w < k && ok; ++w) {
            if (u == v || v == w || u == w) continue;
            if (!value_at_least(lambda[u][w], min(lambda[u][v], lambda[v][w]))) {
              ok = false;
              detail = where + "classes " + std::to_string(u) + "," + std::to_string(v) + "," +
                       std::to_string(w);
            }
          }
        }
      }
      record(RoundProperty::lambda_triangle, ok, detail);
    }

    if (on(RoundProperty::contraction_safety)) {
      const InducedOracle<W> contracted(*oracle_, rec.after);
      const Value<W> before = min(rec.tau_after, min_bipartition_or_inf(induced));
      const Value<W> after = min(rec.tau_after, min_bipartition_or_inf(contracted));
      record(RoundProperty::contraction_safety, values_match(before, after),
             where + "before=" + before.str() + " after=" + after.str());
    }
  }

  void check_loop_invariant(const RoundRecord<W>& rec) {
    if (!on(RoundProperty::loop_invariant)) return;
    const std::string where = "round " + std::to_string(rec.round) + ": ";
    const Value<W> tau = rec.tau_after;
    bool ok = value_at_least(tau, *lambda_);
    std::string detail = where + "lambda=" + lambda_->str() + " tau=" + tau.str();
    if (ok) {
      const Value<W> cut = rec.best_set.empty() ? Value<W>::infinity()
                                                : oracle_->eval(rec.best_set, rec.best_set.complement());
      ok = values_match(cut, tau);
      if (!ok) detail = where + "d(S, V\\S)=" + cut.str() + " != tau=" + tau.str();
    }
    for (ClassIndex c = 0; ok && c < rec.after.class_count(); ++c) {
      const auto m = rec.after.members(c);
      for (std::size_t i = 0; ok && i < m.size(); ++i) {
        for (std::size_t j = i + 1; ok && j < m.size(); ++j) {
          if (!value_at_least((*pair_lambda_)[m[i]][m[j]], tau)) {
            ok = false;
            detail = where + "joined " + std::to_string(m[i]) + "," + std::to_string(m[j]) +
                     " with lambda " + (*pair_lambda_)[m[i]][m[j]].str() + " < tau " + tau.str();
          }
        }
      }
    }
    record(RoundProperty::loop_invariant, ok, detail);
  }

  const LaxOracle<W>* oracle_;
  std::size_t max_classes_;
  std::array<bool, kRoundPropertyCount> enabled_{};
  std::optional<Value<W>> lambda_;
  std::optional<std::vector<std::vector<Value<W>>>> pair_lambda_;
  PropertyTally tally_;
};

}  // namespace symcut
