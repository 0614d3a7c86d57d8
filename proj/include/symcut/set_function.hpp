#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcut/oracle.hpp"

namespace symcut {

using Mask = std::uint32_t;

inline constexpr std::size_t kMaxTableElements = 20;

/// A set function f: 2^V -> R stored as a complete table indexed by bitmask.
template <Weight W>
class SetFunctionTable {
 public:
  SetFunctionTable() = default;

  /// Throws std::invalid_argument if n > 20 or values.size() != 2^n.
  SetFunctionTable(std::size_t n, std::vector<W> values) : n_(n), values_(std::move(values)) {
    if (n > kMaxTableElements) {
      throw std::invalid_argument("set function table: n = " + std::to_string(n) + " exceeds " +
                                  std::to_string(kMaxTableElements));
    }
    if (values_.size() != (std::size_t{1} << n)) {
      throw std::invalid_argument("set function table: expected 2^n values");
    }
  }

  static SetFunctionTable from_function(std::size_t n, const std::function<W(Mask)>& f) {
    if (n > kMaxTableElements) throw std::invalid_argument("set function table: n too large");
    std::vector<W> values(std::size_t{1} << n);
    for (Mask m = 0; m < values.size(); ++m) values[m] = f(m);
    return SetFunctionTable(n, std::move(values));
  }

  std::size_t size() const { return n_; }
  Mask full_mask() const { return static_cast<Mask>((std::size_t{1} << n_) - 1); }
  W operator()(Mask m) const { return values_.at(m); }
  const std::vector<W>& values() const { return values_; }

  friend bool operator==(const SetFunctionTable&, const SetFunctionTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<W> values_{W{0}};
};

/// The connectivity function c_f(S, T) = f(S) + f(T) - f(S u T).
/// Monotone and consistent when f is submodular; for symmetric submodular f,
/// c_f(S, V\S) = 2 f(S) - f(V), so a minimum bipartition minimizes f.
template <Weight W>
class ConnectivityOracle final : public LaxOracle<W> {
 public:
  explicit ConnectivityOracle(SetFunctionTable<W> f) : f_(std::move(f)) {}

  const SetFunctionTable<W>& function() const { return f_; }
  std::size_t ground_size() const override { return f_.size(); }

  Value<W> eval(const ElementSet& s, const ElementSet& t, Value<W> tau) const override {
    this->check_arguments(s, t);
    const auto ms = static_cast<Mask>(s.to_mask());
    const auto mt = static_cast<Mask>(t.to_mask());
    return min(tau, Value<W>(f_(ms) + f_(mt) - f_(ms | mt)));
  }
  using LaxOracle<W>::eval;

 private:
  SetFunctionTable<W> f_;
};

template <Weight W>
ConnectivityOracle<W> connectivity_from_submodular(SetFunctionTable<W> f) {
  return ConnectivityOracle<W>(std::move(f));
}

/// d given explicitly on pairs of disjoint bitmasks. The table must be
/// symmetric; eval on a pair that is not in the table throws.
template <Weight W>
class TableOracle final : public LaxOracle<W> {
 public:
  using Table = std::map<std::pair<Mask, Mask>, W>;

  TableOracle(std::size_t n, Table table) : n_(n), table_(std::move(table)) {
    if (n > kMaxTableElements) throw std::invalid_argument("table oracle: n too large");
    const Mask full = static_cast<Mask>((std::size_t{1} << n) - 1);
    for (const auto& [key, value] : table_) {
      const auto [s, t] = key;
      if ((s & t) != 0) throw std::invalid_argument("table oracle: entry with overlapping sets");
      if (((s | t) & ~full) != 0) throw std::invalid_argument("table oracle: entry outside ground set");
      auto mirror = table_.find({t, s});
      if (mirror == table_.end() || mirror->second != value) {
        throw std::invalid_argument("table oracle: table is not symmetric at (" + std::to_string(s) +
                                    "," + std::to_string(t) + ")");
      }
    }
  }

  /// Tabulates d on every ordered pair of disjoint subsets.
  static TableOracle from_function(std::size_t n, const std::function<W(Mask, Mask)>& d) {
    if (n > 10) throw std::invalid_argument("table oracle: from_function limited to n <= 10");
    Table table;
    const Mask full = static_cast<Mask>((std::size_t{1} << n) - 1);
    for (Mask s = 0; s <= full; ++s) {
      const Mask rest = full & ~s;
      // Enumerate all submasks t of rest, including 0.
      for (Mask t = rest;; t = (t - 1) & rest) {
        table.emplace(std::make_pair(s, t), d(s, t));
        if (t == 0) break;
      }
    }
    return TableOracle(n, std::move(table));
  }

  std::size_t ground_size() const override { return n_; }

  Value<W> eval(const ElementSet& s, const ElementSet& t, Value<W> tau) const override {
    this->check_arguments(s, t);
    const auto key = std::make_pair(static_cast<Mask>(s.to_mask()), static_cast<Mask>(t.to_mask()));
    auto it = table_.find(key);
    if (it == table_.end()) {
      throw std::invalid_argument("table oracle: no entry for (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");
    }
    return min(tau, Value<W>(it->second));
  }
  using LaxOracle<W>::eval;

 private:
  std::size_t n_;
  Table table_;
};

}  // namespace symcut
