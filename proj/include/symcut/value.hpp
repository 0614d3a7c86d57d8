#pragma once

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace symcut {

template <class W>
concept Weight = std::same_as<W, std::int64_t> || std::same_as<W, double>;

/// A value of a set function, extended by -inf and +inf.
///
/// Comparisons are exact. Tolerance-based comparison lives with the
/// verification code, which is the only place that needs it.
template <Weight W>
class Value {
 public:
  enum class Kind : std::uint8_t { negative_infinity, finite, positive_infinity };

  constexpr Value() = default;
  constexpr Value(W w) : kind_(Kind::finite), w_(w) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_floating_point_v<W>) {
      if (std::isnan(w)) throw std::invalid_argument("Value: NaN is not a value");
      if (std::isinf(w)) {
        kind_ = w > 0 ? Kind::positive_infinity : Kind::negative_infinity;
        w_ = W{};
      }
    }
  }

  static constexpr Value infinity() { return Value(Kind::positive_infinity); }
  static constexpr Value negative_infinity() { return Value(Kind::negative_infinity); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_positive_infinity() const { return kind_ == Kind::positive_infinity; }
  constexpr bool is_negative_infinity() const { return kind_ == Kind::negative_infinity; }

  constexpr W finite() const {
    if (!is_finite()) throw std::domain_error("Value: not finite");
    return w_;
  }

  friend constexpr bool operator==(const Value& a, const Value& b) {
    return a.kind_ == b.kind_ && a.w_ == b.w_;
  }

  friend constexpr std::compare_three_way_result_t<W> operator<=>(const Value& a,
                                                                  const Value& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.w_ <=> b.w_;
  }

  friend constexpr Value operator+(const Value& a, const Value& b) {
    if (a.is_finite() && b.is_finite()) return Value(a.w_ + b.w_);
    if ((a.is_positive_infinity() && b.is_negative_infinity()) ||
        (a.is_negative_infinity() && b.is_positive_infinity())) {
      throw std::domain_error("Value: inf - inf is undefined");
    }
    return a.is_finite() ? b : a;
  }

  Value& operator+=(const Value& other) { return *this = *this + other; }

  std::string str() const {
    switch (kind_) {
      case Kind::positive_infinity: return "inf";
      case Kind::negative_infinity: return "-inf";
      case Kind::finite: break;
    }
    std::ostringstream os;
    if constexpr (std::is_floating_point_v<W>) os.precision(17);
    os << w_;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

 private:
  constexpr explicit Value(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  W w_{};
};

template <Weight W>
constexpr Value<W> min(const Value<W>& a, const Value<W>& b) {
  return b < a ? b : a;
}

template <Weight W>
constexpr Value<W> max(const Value<W>& a, const Value<W>& b) {
  return a < b ? b : a;
}

/// Absolute tolerance for comparing verification results on float instances.
inline constexpr double kFloatTolerance = 1e-9;

/// Equality used when checking results against brute force: exact for
/// integers, within kFloatTolerance for floats.
template <Weight W>
bool values_match(const Value<W>& a, const Value<W>& b) {
  if constexpr (std::is_integral_v<W>) {
    return a == b;
  } else {
    if (!a.is_finite() || !b.is_finite()) return a == b;
    return std::fabs(a.finite() - b.finite()) <= kFloatTolerance;
  }
}

/// a >= b, with the float tolerance applied on float instances.
template <Weight W>
bool value_at_least(const Value<W>& a, const Value<W>& b) {
  if constexpr (std::is_integral_v<W>) {
    return a >= b;
  } else {
    if (!a.is_finite() || !b.is_finite()) return a >= b;
    return a.finite() >= b.finite() - kFloatTolerance;
  }
}

}  // namespace symcut
