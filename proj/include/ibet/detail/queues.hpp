#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "ibet/types.hpp"

namespace ibet::detail {

/// Membership flags cleared in O(1) by bumping an epoch.
class EpochMarks {
 public:
  explicit EpochMarks(std::size_t n = 0) : stamp_(n, 0) {}

  void resize(std::size_t n) { stamp_.assign(n, 0), epoch_ = 1; }
  void next() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  bool test(NodeId i) const { return stamp_[i] == epoch_; }
  void set(NodeId i) { stamp_[i] = epoch_; }
  /// Marks i and reports whether it was unmarked.
  bool insert(NodeId i) {
    if (stamp_[i] == epoch_) return false;
    stamp_[i] = epoch_;
    return true;
  }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

/// Max-first queue keyed by distance: a bucket list over integer hop
/// distances for unit-weight graphs, a binary heap otherwise.
class DescendingQueue {
 public:
  void reset(bool unit_weight, std::size_t max_level) {
    unit_ = unit_weight;
    if (unit_ && buckets_.size() < max_level + 1) buckets_.resize(max_level + 1);
    top_ = -1;
    size_ = 0;
    heap_ = {};
  }

  void push(NodeId node, double key) {
    ++size_;
    if (unit_) {
      const auto level = static_cast<std::ptrdiff_t>(key);
      buckets_[level].push_back(node);
      if (level > top_) top_ = level;
    } else {
      heap_.push({key, node});
    }
  }

  bool empty() const { return size_ == 0; }

  NodeId pop() {
    --size_;
    if (unit_) {
      while (buckets_[top_].empty()) --top_;
      const NodeId node = buckets_[top_].back();
      buckets_[top_].pop_back();
      return node;
    }
    const NodeId node = heap_.top().second;
    heap_.pop();
    return node;
  }

 private:
  bool unit_ = true;
  std::vector<std::vector<NodeId>> buckets_;
  std::ptrdiff_t top_ = -1;
  std::size_t size_ = 0;
  std::priority_queue<std::pair<double, NodeId>> heap_;
};

}  // namespace ibet::detail
