#include "symcut/element_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcut {

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members)
    : in_(universe, 0) {
  for (Element e : members) insert(e);
}

ElementSet::ElementSet(std::size_t universe, std::span<const Element> members)
    : in_(universe, 0) {
  insert_all(members);
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("ElementSet::from_mask: universe > 64");
  ElementSet s(universe);
  for (Element e = 0; e < universe; ++e) {
    if ((mask >> e) & 1U) s.insert(e);
  }
  if (universe < 64 && (mask >> universe) != 0) {
    throw std::out_of_range("ElementSet::from_mask: bits outside universe");
  }
  return s;
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (Element e = 0; e < universe; ++e) s.insert(e);
  return s;
}

void ElementSet::insert(Element e) {
  if (e >= in_.size()) {
    throw std::out_of_range("ElementSet: element " + std::to_string(e) + " outside universe of size " +
                            std::to_string(in_.size()));
  }
  if (in_[e] != 0) return;
  in_[e] = 1;
  members_.push_back(e);
}

void ElementSet::insert_all(const ElementSet& other) { insert_all(other.members()); }

void ElementSet::insert_all(std::span<const Element> elements) {
  for (Element e : elements) insert(e);
}

bool ElementSet::intersects(const ElementSet& other) const {
  const ElementSet& small = size() <= other.size() ? *this : other;
  const ElementSet& large = size() <= other.size() ? other : *this;
  return std::any_of(small.members_.begin(), small.members_.end(),
                     [&](Element e) { return large.contains(e); });
}

ElementSet ElementSet::complement() const {
  ElementSet c(universe());
  for (Element e = 0; e < universe(); ++e) {
    if (in_[e] == 0) c.insert(e);
  }
  return c;
}

std::uint64_t ElementSet::to_mask() const {
  if (universe() > 64) throw std::invalid_argument("ElementSet::to_mask: universe > 64");
  std::uint64_t mask = 0;
  for (Element e : members_) mask |= std::uint64_t{1} << e;
  return mask;
}

std::vector<Element> ElementSet::sorted() const {
  std::vector<Element> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string ElementSet::str(std::size_t base) const {
  std::string out = "{";
  bool first = true;
  for (Element e : sorted()) {
    if (!first) out += ',';
    out += std::to_string(e + base);
    first = false;
  }
  return out + "}";
}

}  // namespace symcut
