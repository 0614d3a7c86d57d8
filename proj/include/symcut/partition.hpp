#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symcut/element_set.hpp"

namespace symcut {

/// Index of a class in the current partition, 0 .. class_count()-1.
using ClassIndex = std::size_t;

/// A partition of V = {0, ..., n-1} into nonempty classes.
///
/// Class indices are dense. Joining removes the absorbed class and shifts
/// every higher index down by one, so indices are only stable between joins.
/// Each class keeps its members in join order; members(c)[0] is a stable
/// representative until c is absorbed into another class.
class Partition {
 public:
  /// The discrete partition: one singleton class per element, class i = {i}.
  explicit Partition(std::size_t ground_size);

  std::size_t ground_size() const { return class_of_.size(); }
  std::size_t class_count() const { return members_.size(); }

  ClassIndex class_of(Element e) const { return class_of_.at(e); }
  std::span<const Element> members(ClassIndex c) const { return members_.at(c); }

  /// The members of a class as an ElementSet over V.
  ElementSet class_set(ClassIndex c) const;

  /// The union of the given classes as an ElementSet over V.
  ElementSet expand(std::span<const ClassIndex> classes) const;

  /// Appends the members of `from` to `into` and removes `from`.
  /// Returns the index `into` has after the removal.
  ClassIndex join(ClassIndex into, ClassIndex from);

  /// Checks the structural invariants; throws std::logic_error on violation.
  void validate() const;

 private:
  std::vector<ClassIndex> class_of_;
  std::vector<std::vector<Element>> members_;
};

}  // namespace symcut
