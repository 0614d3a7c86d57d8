#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcut/oracle.hpp"
#include "symcut/partition.hpp"
#include "symcut/value.hpp"

namespace symcut {

enum class QueueKind { heap, bucket };

/// Priority queue with threshold tau. del_max may return any entry whose key
/// k satisfies k >= min{tau, max key}. Keys never decrease.
template <Weight W>
class ThresholdedPQ {
 public:
  explicit ThresholdedPQ(Value<W> tau) : tau_(tau) {}
  virtual ~ThresholdedPQ() = default;

  Value<W> threshold() const { return tau_; }

  /// Throws std::invalid_argument if v is already present.
  virtual void insert(ClassIndex v, Value<W> key) = 0;

  /// Throws std::logic_error on an empty queue.
  virtual std::pair<ClassIndex, Value<W>> del_max() = 0;

  /// Throws std::invalid_argument if v is absent or the key would decrease.
  virtual void update_key(ClassIndex v, Value<W> key) = 0;

  virtual std::size_t size() const = 0;
  virtual bool contains(ClassIndex v) const = 0;
  virtual Value<W> key(ClassIndex v) const = 0;

  bool empty() const { return size() == 0; }

 private:
  Value<W> tau_;
};

/// Indexed binary max-heap ordered by min{tau, key}: del_max returns the
/// lowest class index among the entries with the largest clamped key.
template <Weight W>
class HeapQueue final : public ThresholdedPQ<W> {
 public:
  explicit HeapQueue(Value<W> tau = Value<W>::infinity()) : ThresholdedPQ<W>(tau) {}

  void insert(ClassIndex v, Value<W> key) override {
    if (contains(v)) throw std::invalid_argument("HeapQueue::insert: duplicate " + std::to_string(v));
    if (v >= pos_.size()) {
      pos_.resize(v + 1, kAbsent);
      keys_.resize(v + 1);
    }
    keys_[v] = key;
    pos_[v] = heap_.size();
    heap_.push_back(v);
    sift_up(heap_.size() - 1);
  }

  std::pair<ClassIndex, Value<W>> del_max() override {
    if (heap_.empty()) throw std::logic_error("HeapQueue::del_max: queue is empty");
    const ClassIndex top = heap_.front();
    swap_at(0, heap_.size() - 1);
    heap_.pop_back();
    pos_[top] = kAbsent;
    if (!heap_.empty()) sift_down(0);
    return {top, keys_[top]};
  }

  void update_key(ClassIndex v, Value<W> key) override {
    if (!contains(v)) throw std::invalid_argument("HeapQueue::update_key: absent " + std::to_string(v));
    if (key < keys_[v]) throw std::invalid_argument("HeapQueue::update_key: key decrease");
    keys_[v] = key;
    sift_up(pos_[v]);
  }

  std::size_t size() const override { return heap_.size(); }
  bool contains(ClassIndex v) const override { return v < pos_.size() && pos_[v] != kAbsent; }
  Value<W> key(ClassIndex v) const override {
    if (!contains(v)) throw std::invalid_argument("HeapQueue::key: absent " + std::to_string(v));
    return keys_[v];
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  // Keys at or above tau are equivalent; ties go to the lower index.
  bool before(ClassIndex a, ClassIndex b) const {
    const Value<W> ka = min(this->threshold(), keys_[a]);
    const Value<W> kb = min(this->threshold(), keys_[b]);
    return kb < ka || (ka == kb && a < b);
  }

  void swap_at(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!before(heap_[i], heap_[parent])) break;
      swap_at(i, parent);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    for (;;) {
      std::size_t best = i;
      for (std::size_t child : {2 * i + 1, 2 * i + 2}) {
        if (child < heap_.size() && before(heap_[child], heap_[best])) best = child;
      }
      if (best == i) return;
      swap_at(i, best);
      i = best;
    }
  }

  std::vector<ClassIndex> heap_;
  std::vector<std::size_t> pos_;
  std::vector<Value<W>> keys_;
};

/// Bucket queue over nonnegative integer keys.
///
/// Levels 0 .. cap-1 hold keys below the cap, level cap (overflow) holds
/// every key >= cap, where cap = min{tau, upper_bound + 1}. The overflow
/// level is drained first; within a level the lowest class index wins.
class BucketQueue final : public ThresholdedPQ<std::int64_t> {
 public:
  using Key = Value<std::int64_t>;

  /// `upper_bound` bounds every key that can be inserted below tau.
  BucketQueue(Key tau, std::int64_t upper_bound);

  void insert(ClassIndex v, Key key) override;
  std::pair<ClassIndex, Key> del_max() override;
  void update_key(ClassIndex v, Key key) override;

  std::size_t size() const override { return size_; }
  bool contains(ClassIndex v) const override { return v < level_of_.size() && level_of_[v] != kAbsent; }
  Key key(ClassIndex v) const override;

  std::size_t cap() const { return cap_; }

  /// Levels examined by del_max so far.
  std::size_t levels_scanned() const { return levels_scanned_; }
  /// Total upward movement of the scan pointer caused by insert/update_key.
  std::size_t level_raises() const { return level_raises_; }
  std::size_t del_max_count() const { return del_max_count_; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  std::size_t level_for(const Key& key) const;
  void raise_top(std::size_t level);

  std::int64_t upper_bound_;
  std::size_t cap_;
  std::vector<std::set<ClassIndex>> levels_;
  std::vector<std::size_t> level_of_;
  std::vector<Key> keys_;
  std::size_t top_ = 0;
  std::size_t size_ = 0;
  std::size_t levels_scanned_ = 0;
  std::size_t level_raises_ = 0;
  std::size_t del_max_count_ = 0;
};

/// Creates a queue for one order construction. The bucket queue needs
/// integer weights and an oracle-declared key bound; anything else raises
/// CapabilityError.
template <Weight W>
std::unique_ptr<ThresholdedPQ<W>> make_queue(QueueKind kind, Value<W> tau,
                                             std::optional<W> key_upper_bound) {
  if (kind == QueueKind::heap) return std::make_unique<HeapQueue<W>>(tau);
  if constexpr (std::is_same_v<W, std::int64_t>) {
    if (!key_upper_bound) {
      throw CapabilityError("bucket queue: oracle declares no integer key bound");
    }
    return std::make_unique<BucketQueue>(tau, *key_upper_bound);
  } else {
    throw CapabilityError("bucket queue: requires integer weights");
  }
}

}  // namespace symcut
