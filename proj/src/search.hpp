#pragma once

// Shared machinery for the exact searches: node budget, a deterministic task
// runner, and lexicographic k-subset enumeration over 64-bit masks.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

namespace kalliance::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

/// Bits [lo, hi).
inline Mask range_mask(int lo, int hi) {
  if (hi <= lo) return 0;
  Mask upper = hi >= 64 ? ~Mask{0} : bit(hi) - 1;
  Mask lower = bit(lo) - 1;
  return upper & ~lower;
}

inline int popcount(Mask m) { return std::popcount(m); }

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  /// Counts one node; false once the limit is exceeded.
  bool tick() {
    if (exhausted_.load(std::memory_order_relaxed)) return false;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > limit_) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return std::min(nodes_.load(), limit_); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

/// Runs body(i) for i in [0, count) on up to `threads` workers. Tasks are
/// claimed in increasing index order.
inline void run_tasks(int count, unsigned threads, const std::function<void(int)>& body) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
  };
  std::vector<std::jthread> pool;
  const unsigned spawn = std::min<unsigned>(threads, static_cast<unsigned>(count));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
}

/// Lowers `target` to `value` if smaller.
template <typename T>
void atomic_min(std::atomic<T>& target, T value) {
  T current = target.load();
  while (value < current && !target.compare_exchange_weak(current, value)) {
  }
}

/// Enumerates k-subsets of {0..n-1} in lexicographic order of sorted member
/// lists. `viable(chosen, excluded, next)` prunes partial states: vertices
/// below `next` are decided (in `chosen` or `excluded`), the rest are open.
/// `leaf(chosen)` returns true to stop the enumeration.
///
/// Task i of a split enumeration covers the subsets whose least member is i.
template <typename Viable, typename Leaf, typename Stop>
class Combinations {
 public:
  Combinations(int n, int size, Budget& budget, Viable& viable, Leaf& leaf, Stop& stop)
      : n_(n), size_(size), budget_(budget), viable_(viable), leaf_(leaf), stop_(stop) {}

  int task_count() const { return size_ == 0 ? 1 : std::max(0, n_ - size_ + 1); }

  /// Returns true when the leaf callback asked to stop.
  bool run_task(int first) {
    if (size_ == 0) return leaf_(Mask{0});
    if (!budget_.tick()) return false;
    const Mask chosen = bit(first);
    const Mask excluded = range_mask(0, first);
    const bool complete = size_ == 1;
    if (!viable_(chosen, complete ? (excluded | range_mask(first + 1, n_)) : excluded, complete ? n_ : first + 1)) {
      return false;
    }
    return descend(chosen, 1, first + 1, excluded);
  }

 private:
  bool descend(Mask chosen, int count, int next, Mask excluded) {
    if (count == size_) return leaf_(chosen);
    const int last = n_ - (size_ - count);
    for (int v = next; v <= last; ++v) {
      if (stop_() || !budget_.tick()) return false;
      const Mask c = chosen | bit(v);
      const Mask x = excluded | range_mask(next, v);
      const int after = v + 1;
      const Mask x_full = (count + 1 == size_) ? (x | range_mask(after, n_)) : x;
      const int next_full = (count + 1 == size_) ? n_ : after;
      if (!viable_(c, x_full, next_full)) continue;
      if (descend(c, count + 1, after, x)) return true;
    }
    return false;
  }

  int n_;
  int size_;
  Budget& budget_;
  Viable& viable_;
  Leaf& leaf_;
  Stop& stop_;
};

}  // namespace kalliance::detail
