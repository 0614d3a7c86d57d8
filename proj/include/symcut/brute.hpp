#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcut/element_set.hpp"
#include "symcut/lax_back_order.hpp"
#include "symcut/oracle.hpp"
#include "symcut/partition.hpp"
#include "symcut/set_function.hpp"
#include "symcut/value.hpp"

// Exhaustive ground truth. Every oracle call here uses tau = +inf so that a
// threshold never hides a violation.

namespace symcut {

inline constexpr std::size_t kMaxBruteElements = 24;
inline constexpr std::size_t kMaxAxiomCheckElements = 6;

template <Weight W>
struct BruteResult {
  std::uint64_t best_set = 0;
  Value<W> best_value = Value<W>::infinity();
};

namespace detail {

inline std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

template <Weight W>
Value<W> cut_value(const LaxOracle<W>& oracle, std::uint64_t s) {
  const std::size_t n = oracle.ground_size();
  return oracle.eval(ElementSet::from_mask(n, s), ElementSet::from_mask(n, full_mask(n) & ~s));
}

inline void check_brute_size(std::size_t n, std::size_t lo, std::size_t hi, const char* what) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

inline std::string mask_str(std::size_t n, std::uint64_t m) { return ElementSet::from_mask(n, m).str(); }

}  // namespace detail

/// Minimum of d(S, V\S) over the 2^(n-1) - 1 nontrivial bipartitions. S is
/// reported as the side not containing element 0; ties go to the smallest
/// bitmask.
template <Weight W>
BruteResult<W> brute_min_bipartition(const LaxOracle<W>& oracle) {
  const std::size_t n = oracle.ground_size();
  detail::check_brute_size(n, 2, kMaxBruteElements, "brute_min_bipartition");
  BruteResult<W> best;
  const std::uint64_t full = detail::full_mask(n);
  for (std::uint64_t s = 2; s <= full; s += 2) {
    const Value<W> v = detail::cut_value(oracle, s);
    if (best.best_set == 0 || v < best.best_value) {
      best.best_set = s;
      best.best_value = v;
    }
  }
  return best;
}

/// lambda(s, t): minimum of d(S, V\S) over S with s in S and t not in S.
template <Weight W>
Value<W> brute_lambda(const LaxOracle<W>& oracle, Element s, Element t) {
  const std::size_t n = oracle.ground_size();
  detail::check_brute_size(n, 2, kMaxBruteElements, "brute_lambda");
  if (s == t) throw std::invalid_argument("brute_lambda: s and t must differ");
  if (s >= n || t >= n) throw std::invalid_argument("brute_lambda: element out of range");
  const std::uint64_t full = detail::full_mask(n);
  const std::uint64_t free = full & ~(std::uint64_t{1} << s) & ~(std::uint64_t{1} << t);
  Value<W> best = Value<W>::infinity();
  for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
    best = min(best, detail::cut_value(oracle, sub | (std::uint64_t{1} << s)));
    if (sub == 0) break;
  }
  return best;
}

/// All pairwise lambda values; entry [s][t] for s != t.
template <Weight W>
std::vector<std::vector<Value<W>>> brute_lambda_matrix(const LaxOracle<W>& oracle) {
  const std::size_t n = oracle.ground_size();
  std::vector<std::vector<Value<W>>> out(n, std::vector<Value<W>>(n, Value<W>::infinity()));
  for (Element s = 0; s < n; ++s) {
    for (Element t = s + 1; t < n; ++t) {
      out[s][t] = out[t][s] = brute_lambda(oracle, s, t);
    }
  }
  return out;
}

/// Outcome of an exhaustive axiom check; `witness` describes the first
/// violation found.
struct CheckReport {
  bool ok = true;
  std::string witness;

  explicit operator bool() const { return ok; }
};

/// d(S, T') <= d(S, T) for all disjoint S, T and T' subset of T.
template <Weight W>
CheckReport check_monotone(const LaxOracle<W>& oracle) {
  const std::size_t n = oracle.ground_size();
  detail::check_brute_size(n, 0, kMaxAxiomCheckElements, "check_monotone");
  // Each element is in none, S, T' or T\T'.
  std::size_t configs = 1;
  for (std::size_t i = 0; i < n; ++i) configs *= 4;
  for (std::size_t code = 0; code < configs; ++code) {
    std::uint64_t s = 0, t_sub = 0, t_rest = 0;
    std::size_t c = code;
    for (std::size_t e = 0; e < n; ++e, c /= 4) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      switch (c % 4) {
        case 1: s |= bit; break;
        case 2: t_sub |= bit; break;
        case 3: t_rest |= bit; break;
        default: break;
      }
    }
    const auto S = ElementSet::from_mask(n, s);
    const Value<W> small = oracle.eval(S, ElementSet::from_mask(n, t_sub));
    const Value<W> large = oracle.eval(S, ElementSet::from_mask(n, t_sub | t_rest));
    if (!value_at_least(large, small)) {
      return {false, "d(" + detail::mask_str(n, s) + "," + detail::mask_str(n, t_sub) + ")=" +
                         small.str() + " > d(" + detail::mask_str(n, s) + "," +
                         detail::mask_str(n, t_sub | t_rest) + ")=" + large.str()};
    }
  }
  return {};
}

/// d(S, R) >= d(T, R) implies d(S, R u T) >= d(S u R, T) for pairwise
/// disjoint R, S, T.
template <Weight W>
CheckReport check_consistent(const LaxOracle<W>& oracle) {
  const std::size_t n = oracle.ground_size();
  detail::check_brute_size(n, 0, kMaxAxiomCheckElements, "check_consistent");
  std::size_t configs = 1;
  for (std::size_t i = 0; i < n; ++i) configs *= 4;
  for (std::size_t code = 0; code < configs; ++code) {
    std::uint64_t r = 0, s = 0, t = 0;
    std::size_t c = code;
    for (std::size_t e = 0; e < n; ++e, c /= 4) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      switch (c % 4) {
        case 1: r |= bit; break;
        case 2: s |= bit; break;
        case 3: t |= bit; break;
        default: break;
      }
    }
    const auto R = ElementSet::from_mask(n, r);
    const auto S = ElementSet::from_mask(n, s);
    const auto T = ElementSet::from_mask(n, t);
    if (!(oracle.eval(S, R) >= oracle.eval(T, R))) continue;
    const Value<W> lhs = oracle.eval(S, ElementSet::from_mask(n, r | t));
    const Value<W> rhs = oracle.eval(ElementSet::from_mask(n, s | r), T);
    if (!value_at_least(lhs, rhs)) {
      return {false, "R=" + detail::mask_str(n, r) + " S=" + detail::mask_str(n, s) +
                         " T=" + detail::mask_str(n, t) + ": d(S,R u T)=" + lhs.str() +
                         " < d(S u R,T)=" + rhs.str()};
    }
  }
  return {};
}

struct SymmetricSubmodularReport {
  bool symmetric = true;
  bool submodular = true;
  std::string witness;
};

/// Symmetry f(A) = f(V\A) and submodularity f(S) + f(T) >= f(S u T) + f(S n T).
/// Submodularity is checked through the equivalent local form
/// f(A+i) + f(A+j) >= f(A+i+j) + f(A) for i, j not in A.
template <Weight W>
SymmetricSubmodularReport check_symmetric_submodular(const SetFunctionTable<W>& f) {
  SymmetricSubmodularReport out;
  const std::size_t n = f.size();
  const Mask full = f.full_mask();
  for (Mask a = 0; a <= full; ++a) {
    if (!values_match(Value<W>(f(a)), Value<W>(f(full & ~a)))) {
      out.symmetric = false;
      if (out.witness.empty()) {
        out.witness = "f(" + detail::mask_str(n, a) + ") != f(" + detail::mask_str(n, full & ~a) + ")";
      }
      break;
    }
  }
  for (Mask a = 0; a <= full && out.submodular; ++a) {
    for (std::size_t i = 0; i < n && out.submodular; ++i) {
      const Mask bi = Mask{1} << i;
      if (a & bi) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        const Mask bj = Mask{1} << j;
        if (a & bj) continue;
        const Value<W> lhs = Value<W>(f(a | bi)) + Value<W>(f(a | bj));
        const Value<W> rhs = Value<W>(f(a | bi | bj)) + Value<W>(f(a));
        if (!value_at_least(lhs, rhs)) {
          out.submodular = false;
          if (out.witness.empty()) {
            out.witness = "A=" + detail::mask_str(n, a) + " i=" + std::to_string(i) +
                          " j=" + std::to_string(j) + " violates diminishing returns";
          }
          break;
        }
      }
    }
  }
  return out;
}

/// Re-evaluates a lax-back order on the induced function of `partition`:
/// every stored key must match min{tau, d([v_i], prefix)} and dominate
/// min{tau, d([v_j], prefix)} for every later class v_j. The first key is
/// the +inf sentinel and is not compared.
template <Weight W>
CheckReport verify_lax_back_order(const LaxOracle<W>& oracle, const Partition& partition,
                                  const LaxBackOrder<W>& order) {
  const std::size_t k = partition.class_count();
  const Value<W> tau = order.threshold;
  if (order.order.size() != k || order.keys.size() != k) {
    return {false, "order does not cover all classes"};
  }
  std::vector<std::uint8_t> seen(k, 0);
  for (ClassIndex c : order.order) {
    if (c >= k || seen[c]++ != 0) return {false, "order is not a permutation of the classes"};
  }
  if (!order.keys.front().is_positive_infinity()) return {false, "first key is not +inf"};

  std::vector<ElementSet> sets;
  for (ClassIndex c : order.order) sets.push_back(partition.class_set(c));
  ElementSet prefix = sets[0];
  for (std::size_t i = 1; i < k; ++i) {
    const Value<W> own = min(tau, oracle.eval(sets[i], prefix));
    if (!values_match(own, order.keys[i])) {
      return {false, "position " + std::to_string(i) + ": stored key " + order.keys[i].str() +
                         " != recomputed " + own.str()};
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      const Value<W> later = min(tau, oracle.eval(sets[j], prefix));
      if (!value_at_least(own, later)) {
        return {false, "position " + std::to_string(i) + " (key " + own.str() + ") beaten by position " +
                           std::to_string(j) + " (" + later.str() + ")"};
      }
    }
    prefix.insert_all(sets[i]);
  }
  return {};
}

}  // namespace symcut
