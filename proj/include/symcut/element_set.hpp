#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace symcut {

/// Index of a member of the ground set V = {0, ..., n-1}.
using Element = std::size_t;

/// A subset of a ground set of fixed size. Keeps both a member list (in
/// insertion order) and a membership bitmap, so iteration is O(|S|) and
/// membership tests are O(1).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : in_(universe, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members);
  ElementSet(std::size_t universe, std::span<const Element> members);

  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);
  static ElementSet full(std::size_t universe);

  std::size_t universe() const { return in_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Element e) const { return e < in_.size() && in_[e] != 0; }
  std::span<const Element> members() const { return members_; }

  /// Adds e; throws std::out_of_range if e is outside the universe.
  /// Adding a present element is a no-op.
  void insert(Element e);
  void insert_all(const ElementSet& other);
  void insert_all(std::span<const Element> elements);

  bool intersects(const ElementSet& other) const;
  ElementSet complement() const;

  /// Bitmask representation; requires universe() <= 64.
  std::uint64_t to_mask() const;

  /// Sorted members.
  std::vector<Element> sorted() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.in_ == b.in_;
  }

  /// "{a,b,c}" with ids shifted by `base` (1 for file-facing output).
  std::string str(std::size_t base = 0) const;

 private:
  std::vector<Element> members_;
  std::vector<std::uint8_t> in_;
};

}  // namespace symcut
