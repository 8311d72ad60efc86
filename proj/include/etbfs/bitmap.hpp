#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <vector>

namespace etbfs {

/// Fixed-size bitmap over vertex ids. Plain set/get are not synchronized;
/// concurrent writers must go through set_atomic. Storage is 64-bit words so
/// kernels can process vertices a word at a time.
class Bitmap {
 public:
  static constexpr std::uint64_t kWordBits = 64;

  Bitmap() = default;
  explicit Bitmap(std::uint64_t bit_count)
      : bit_count_(bit_count), words_((bit_count + kWordBits - 1) / kWordBits, 0) {}

  std::uint64_t bit_count() const { return bit_count_; }
  std::uint64_t word_count() const { return words_.size(); }

  bool get(std::uint64_t i) const {
    assert(i < bit_count_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }

  void set(std::uint64_t i) {
    assert(i < bit_count_);
    words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }

  /// Relaxed atomic read for words that concurrent claimers may be writing.
  bool get_atomic(std::uint64_t i) const {
    assert(i < bit_count_);
    std::atomic_ref<std::uint64_t> word(const_cast<std::uint64_t&>(words_[i / kWordBits]));
    return (word.load(std::memory_order_relaxed) >> (i % kWordBits)) & 1u;
  }

  /// Atomically sets bit i; returns true if this call flipped it from 0.
  bool set_atomic(std::uint64_t i) {
    assert(i < bit_count_);
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    std::atomic_ref<std::uint64_t> word(words_[i / kWordBits]);
    return (word.fetch_or(mask, std::memory_order_relaxed) & mask) == 0;
  }

  std::uint64_t word(std::uint64_t wi) const { return words_[wi]; }
  void set_word(std::uint64_t wi, std::uint64_t value) { words_[wi] = value; }

  void clear_all() { std::fill(words_.begin(), words_.end(), 0); }

  std::uint64_t count_set() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return total;
  }

  void swap(Bitmap& other) {
    words_.swap(other.words_);
    std::swap(bit_count_, other.bit_count_);
  }

 private:
  std::uint64_t bit_count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Shared traversal state: the visited set plus the current and next level
/// frontiers. Invariants between level steps: current is a subset of
/// visited, and next never intersects the visited set as it stood when the
/// level began.
struct FrontierState {
  Bitmap visited;
  Bitmap current;
  Bitmap next;

  FrontierState() = default;
  explicit FrontierState(std::uint64_t vertex_count)
      : visited(vertex_count), current(vertex_count), next(vertex_count) {}

  void advance_level() {
    current.swap(next);
    next.clear_all();
  }
};

}  // namespace etbfs
