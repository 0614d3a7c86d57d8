#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcut/element_set.hpp"
#include "symcut/partition.hpp"
#include "symcut/value.hpp"

namespace symcut {

/// Thrown when an algorithm needs an oracle feature the oracle lacks
/// (incremental keys, integer outputs).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incremental back-key maintenance for one order construction over a fixed
/// partition. key(c) is d([c], P) where P is the union of the classes
/// appended so far.
template <Weight W>
class KeyTracker {
 public:
  virtual ~KeyTracker() = default;

  virtual Value<W> key(ClassIndex c) const = 0;

  /// Moves class `c` into the prefix. Every class outside the prefix whose
  /// key changed is appended to `changed`.
  virtual void append(ClassIndex c, std::vector<ClassIndex>& changed) = 0;
};

/// Access to a symmetric set function d through its lax oracle
/// F(S, T; tau) = min{tau, d(S, T)} for disjoint S, T.
///
/// Implementations must be pure: equal arguments give equal results.
template <Weight W>
class LaxOracle {
 public:
  virtual ~LaxOracle() = default;

  virtual std::size_t ground_size() const = 0;

  /// min{tau, d(S, T)}. Throws std::invalid_argument if S and T overlap or
  /// live over a different ground set.
  virtual Value<W> eval(const ElementSet& s, const ElementSet& t, Value<W> tau) const = 0;

  Value<W> eval(const ElementSet& s, const ElementSet& t) const {
    return eval(s, t, Value<W>::infinity());
  }

  /// True if make_key_tracker() returns a tracker.
  virtual bool keyed() const { return false; }

  virtual std::unique_ptr<KeyTracker<W>> make_key_tracker(const Partition& /*partition*/) const {
    return nullptr;
  }

  /// For integer-valued oracles with nonnegative outputs: an upper bound on
  /// every value d can take. Required by the bucket queue.
  virtual std::optional<W> key_upper_bound() const { return std::nullopt; }

 protected:
  void check_arguments(const ElementSet& s, const ElementSet& t) const {
    if (s.universe() != ground_size() || t.universe() != ground_size()) {
      throw std::invalid_argument("oracle: set over a ground set of size " +
                                  std::to_string(s.universe() != ground_size() ? s.universe()
                                                                               : t.universe()) +
                                  ", expected " + std::to_string(ground_size()));
    }
    if (s.intersects(t)) throw std::invalid_argument("oracle: arguments are not disjoint");
  }
};

namespace detail {

template <Weight W>
class ClampedKeyTracker final : public KeyTracker<W> {
 public:
  ClampedKeyTracker(std::unique_ptr<KeyTracker<W>> inner, Value<W> cap)
      : inner_(std::move(inner)), cap_(cap) {}
  Value<W> key(ClassIndex c) const override { return min(cap_, inner_->key(c)); }
  void append(ClassIndex c, std::vector<ClassIndex>& changed) override {
    inner_->append(c, changed);
  }

 private:
  std::unique_ptr<KeyTracker<W>> inner_;
  Value<W> cap_;
};

}  // namespace detail

/// d'(S, T) = min{cap, d(S, T)}. Monotone and consistent whenever d is.
template <Weight W>
class ThresholdedOracle final : public LaxOracle<W> {
 public:
  ThresholdedOracle(const LaxOracle<W>& inner, Value<W> cap) : inner_(&inner), cap_(cap) {}

  std::size_t ground_size() const override { return inner_->ground_size(); }
  Value<W> cap() const { return cap_; }

  Value<W> eval(const ElementSet& s, const ElementSet& t, Value<W> tau) const override {
    return inner_->eval(s, t, min(tau, cap_));
  }
  using LaxOracle<W>::eval;

  bool keyed() const override { return inner_->keyed(); }
  std::unique_ptr<KeyTracker<W>> make_key_tracker(const Partition& p) const override {
    auto inner = inner_->make_key_tracker(p);
    if (!inner) return nullptr;
    return std::make_unique<detail::ClampedKeyTracker<W>>(std::move(inner), cap_);
  }
  std::optional<W> key_upper_bound() const override { return inner_->key_upper_bound(); }

 private:
  const LaxOracle<W>* inner_;
  Value<W> cap_;
};

template <Weight W>
ThresholdedOracle<W> thresholded(const LaxOracle<W>& oracle, Value<W> cap) {
  return ThresholdedOracle<W>(oracle, cap);
}

/// The induced function d_P on the classes of a partition: a set of classes
/// is expanded to the union of its members before the call. The ground set
/// of the induced oracle is {0, ..., class_count-1}.
template <Weight W>
class InducedOracle final : public LaxOracle<W> {
 public:
  InducedOracle(const LaxOracle<W>& inner, const Partition& partition)
      : inner_(&inner), partition_(&partition) {
    if (partition.ground_size() != inner.ground_size()) {
      throw std::invalid_argument("InducedOracle: partition does not match oracle ground set");
    }
  }

  std::size_t ground_size() const override { return partition_->class_count(); }

  Value<W> eval(const ElementSet& s, const ElementSet& t, Value<W> tau) const override {
    this->check_arguments(s, t);
    return inner_->eval(partition_->expand(s.members()), partition_->expand(t.members()), tau);
  }
  using LaxOracle<W>::eval;

 private:
  const LaxOracle<W>* inner_;
  const Partition* partition_;
};

}  // namespace symcut
