#include <algorithm>

#include "symcut/threshold_queue.hpp"

namespace symcut {

namespace {

std::size_t compute_cap(const BucketQueue::Key& tau, std::int64_t upper_bound) {
  if (upper_bound < 0) throw std::invalid_argument("BucketQueue: negative key bound");
  const std::int64_t by_bound = upper_bound + 1;
  if (tau.is_positive_infinity()) return static_cast<std::size_t>(by_bound);
  if (tau.is_negative_infinity()) return 0;
  return static_cast<std::size_t>(std::clamp<std::int64_t>(tau.finite(), 0, by_bound));
}

}  // namespace

BucketQueue::BucketQueue(Key tau, std::int64_t upper_bound)
    : ThresholdedPQ<std::int64_t>(tau),
      upper_bound_(upper_bound),
      cap_(compute_cap(tau, upper_bound)),
      levels_(cap_ + 1) {}

std::size_t BucketQueue::level_for(const Key& key) const {
  if (key.is_negative_infinity() || (key.is_finite() && key.finite() < 0)) {
    throw std::invalid_argument("BucketQueue: negative key " + key.str());
  }
  // Keys beyond the declared bound are only representable when the
  // threshold already clamps them.
  if (!(threshold() <= key) && (!key.is_finite() || key.finite() > upper_bound_)) {
    throw std::invalid_argument("BucketQueue: key " + key.str() + " exceeds declared bound " +
                                std::to_string(upper_bound_));
  }
  if (!key.is_finite() || key.finite() >= static_cast<std::int64_t>(cap_)) return cap_;
  return static_cast<std::size_t>(key.finite());
}

void BucketQueue::raise_top(std::size_t level) {
  if (level > top_) {
    level_raises_ += level - top_;
    top_ = level;
  } else if (size_ == 1) {
    top_ = level;
  }
}

void BucketQueue::insert(ClassIndex v, Key key) {
  if (contains(v)) throw std::invalid_argument("BucketQueue::insert: duplicate " + std::to_string(v));
  const std::size_t level = level_for(key);
  if (v >= level_of_.size()) {
    level_of_.resize(v + 1, kAbsent);
    keys_.resize(v + 1);
  }
  levels_[level].insert(v);
  level_of_[v] = level;
  keys_[v] = key;
  ++size_;
  raise_top(level);
}

std::pair<ClassIndex, BucketQueue::Key> BucketQueue::del_max() {
  if (size_ == 0) throw std::logic_error("BucketQueue::del_max: queue is empty");
  ++del_max_count_;
  for (;;) {
    ++levels_scanned_;
    auto& level = levels_[top_];
    if (!level.empty()) {
      const ClassIndex v = *level.begin();
      level.erase(level.begin());
      level_of_[v] = kAbsent;
      --size_;
      return {v, keys_[v]};
    }
    // size_ > 0 guarantees a nonempty level at or below top_.
    --top_;
  }
}

void BucketQueue::update_key(ClassIndex v, Key key) {
  if (!contains(v)) throw std::invalid_argument("BucketQueue::update_key: absent " + std::to_string(v));
  if (key < keys_[v]) throw std::invalid_argument("BucketQueue::update_key: key decrease");
  const std::size_t level = level_for(key);
  keys_[v] = key;
  if (level == level_of_[v]) return;
  levels_[level_of_[v]].erase(v);
  levels_[level].insert(v);
  level_of_[v] = level;
  raise_top(level);
}

BucketQueue::Key BucketQueue::key(ClassIndex v) const {
  if (!contains(v)) throw std::invalid_argument("BucketQueue::key: absent " + std::to_string(v));
  return keys_[v];
}

}  // namespace symcut
