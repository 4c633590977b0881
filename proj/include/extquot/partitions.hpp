#pragma once

// Integer partitions in run-length form and the invariants that every
// component formula is written in terms of.

#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace extquot {

struct PartRun {
  std::int64_t part;
  std::int64_t multiplicity;
  auto operator<=>(const PartRun&) const = default;
};

/// A partition of n stored as (part, multiplicity) runs with strictly
/// increasing distinct parts.
class Partition {
 public:
  Partition() = default;  // the empty partition of 0

  /// Any order, positive parts. Throws std::invalid_argument otherwise.
  static Partition from_parts(std::span<const std::int64_t> parts);
  /// Runs in any order; equal parts are merged. Multiplicities must be >= 1.
  static Partition from_runs(std::vector<PartRun> runs);

  std::int64_t n() const { return n_; }
  std::span<const PartRun> runs() const { return runs_; }
  std::int64_t distinct_parts() const { return static_cast<std::int64_t>(runs_.size()); }
  std::int64_t total_parts() const;

  /// Parts in increasing order, with repetition.
  std::vector<std::int64_t> parts() const;
  /// "1+1+2+2"; the empty partition renders as "0".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::int64_t n_ = 0;
  std::vector<PartRun> runs_;
};

/// Invariants of a partition: gcd of parts, gcd of multiplicities, number of
/// distinct parts, number of parts, and p_i = number of distinct parts with
/// multiplicity > i (stored from i = 1, trailing zeros trimmed).
struct PartitionInvariants {
  std::int64_t g = 0;
  std::int64_t m = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::vector<std::int64_t> p;

  /// p_i for i >= 1; zero beyond the stored range.
  std::int64_t p_at(std::int64_t i) const;
};

PartitionInvariants invariants(const Partition& mu);

/// Lazy stream over the partitions of n in decreasing lexicographic order of
/// the descending part list ([n], [n-1, 1], ..., [1, ..., 1]).
///
/// Only the current partition is held in memory. The stream can be limited
/// to partitions whose largest part equals a given value, which is how work
/// is split across threads.
class PartitionStream {
 public:
  explicit PartitionStream(std::int64_t n);
  static PartitionStream with_largest_part(std::int64_t n, std::int64_t largest);

  /// Current partition, or nullopt when exhausted.
  const Partition* current() const { return done_ ? nullptr : &current_; }
  void advance();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(PartitionStream* stream) : stream_(stream) {}
    reference operator*() const { return *stream_->current(); }
    pointer operator->() const { return stream_->current(); }
    iterator& operator++() {
      stream_->advance();
      return *this;
    }
    void operator++(int) { stream_->advance(); }
    bool operator==(std::default_sentinel_t) const {
      return stream_ == nullptr || stream_->current() == nullptr;
    }

   private:
    PartitionStream* stream_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  PartitionStream() = default;
  void publish();

  std::vector<PartRun> descending_;  // runs, largest part first
  Partition current_;
  bool fixed_largest_ = false;
  bool done_ = false;
};

/// P(n) by Euler's pentagonal-number recurrence.
std::int64_t partition_count(std::int64_t n);

/// P_2(r) = sum_{s=0}^{r} P(s) P(r-s): partitions of r into parts of two kinds.
std::int64_t partitions_pairs(std::int64_t r);

/// Accepts "1+1+2+2", "4,4,4,4" and run-length "2^2,4^1" (mixable).
/// Throws std::invalid_argument on malformed text.
Partition parse_partition(std::string_view text);

}  // namespace extquot
