#include "symcut/partition.hpp"

#include <stdexcept>
#include <string>

namespace symcut {

Partition::Partition(std::size_t ground_size) : class_of_(ground_size), members_(ground_size) {
  for (Element e = 0; e < ground_size; ++e) {
    class_of_[e] = e;
    members_[e].push_back(e);
  }
}

ElementSet Partition::class_set(ClassIndex c) const {
  return ElementSet(ground_size(), std::span<const Element>(members_.at(c)));
}

ElementSet Partition::expand(std::span<const ClassIndex> classes) const {
  ElementSet out(ground_size());
  for (ClassIndex c : classes) out.insert_all(std::span<const Element>(members_.at(c)));
  return out;
}

ClassIndex Partition::join(ClassIndex into, ClassIndex from) {
  if (into >= class_count() || from >= class_count()) {
    throw std::out_of_range("Partition::join: class index out of range");
  }
  if (into == from) throw std::invalid_argument("Partition::join: cannot join a class with itself");

  auto& target = members_[into];
  target.insert(target.end(), members_[from].begin(), members_[from].end());
  members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(from));

  // Renumber: everything in `from` now belongs to `into`, indices above
  // `from` shift down.
  const ClassIndex new_into = into > from ? into - 1 : into;
  for (auto& c : class_of_) {
    if (c == from) {
      c = new_into;
    } else if (c > from) {
      --c;
    }
  }
  return new_into;
}

void Partition::validate() const {
  std::vector<int> seen(ground_size(), 0);
  for (ClassIndex c = 0; c < members_.size(); ++c) {
    if (members_[c].empty()) throw std::logic_error("Partition: empty class " + std::to_string(c));
    for (Element e : members_[c]) {
      if (e >= ground_size()) throw std::logic_error("Partition: element outside ground set");
      if (seen[e]++ != 0) throw std::logic_error("Partition: element in two classes");
      if (class_of_[e] != c) throw std::logic_error("Partition: class_of out of sync");
    }
  }
  for (Element e = 0; e < ground_size(); ++e) {
    if (seen[e] == 0) throw std::logic_error("Partition: element in no class");
  }
}

}  // namespace symcut
