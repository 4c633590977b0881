#include "extquot/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "extquot/numtheory.hpp"

namespace extquot {

Partition Partition::from_parts(std::span<const std::int64_t> parts) {
  std::vector<PartRun> runs;
  runs.reserve(parts.size());
  for (std::int64_t part : parts) runs.push_back({part, 1});
  return from_runs(std::move(runs));
}

Partition Partition::from_runs(std::vector<PartRun> runs) {
  std::sort(runs.begin(), runs.end());
  Partition out;
  int128 total = 0;
  for (const PartRun& run : runs) {
    if (run.part < 1) throw std::invalid_argument("partition parts must be positive");
    if (run.multiplicity < 1) throw std::invalid_argument("partition multiplicities must be positive");
    if (!out.runs_.empty() && out.runs_.back().part == run.part) {
      out.runs_.back().multiplicity += run.multiplicity;
    } else {
      out.runs_.push_back(run);
    }
    total += static_cast<int128>(run.part) * run.multiplicity;
  }
  out.n_ = narrow(total);
  return out;
}

std::int64_t Partition::total_parts() const {
  std::int64_t c = 0;
  for (const PartRun& run : runs_) c += run.multiplicity;
  return c;
}

std::vector<std::int64_t> Partition::parts() const {
  std::vector<std::int64_t> out;
  for (const PartRun& run : runs_) out.insert(out.end(), static_cast<std::size_t>(run.multiplicity), run.part);
  return out;
}

std::string Partition::to_string() const {
  if (runs_.empty()) return "0";
  std::string out;
  for (std::int64_t part : parts()) {
    if (!out.empty()) out += '+';
    out += std::to_string(part);
  }
  return out;
}

std::int64_t PartitionInvariants::p_at(std::int64_t i) const {
  if (i < 1 || i > static_cast<std::int64_t>(p.size())) return 0;
  return p[static_cast<std::size_t>(i - 1)];
}

PartitionInvariants invariants(const Partition& mu) {
  PartitionInvariants inv;
  std::int64_t max_mult = 0;
  for (const PartRun& run : mu.runs()) {
    inv.g = std::gcd(inv.g, run.part);
    inv.m = std::gcd(inv.m, run.multiplicity);
    inv.c += run.multiplicity;
    max_mult = std::max(max_mult, run.multiplicity);
  }
  inv.b = mu.distinct_parts();
  // p_i for i = 1 .. max_mult - 1; every entry is nonzero in that range.
  inv.p.assign(static_cast<std::size_t>(std::max<std::int64_t>(max_mult - 1, 0)), 0);
  for (const PartRun& run : mu.runs()) {
    for (std::int64_t i = 1; i < run.multiplicity; ++i) ++inv.p[static_cast<std::size_t>(i - 1)];
  }
  return inv;
}

// ---------------------------------------------------------------------------

PartitionStream::PartitionStream(std::int64_t n) {
  if (n < 0) throw std::domain_error("enumerate_partitions: negative n");
  if (n > 0) descending_.push_back({n, 1});
  publish();
}

PartitionStream PartitionStream::with_largest_part(std::int64_t n, std::int64_t largest) {
  if (n < 1 || largest < 1 || largest > n) {
    throw std::domain_error("with_largest_part: need 1 <= largest <= n");
  }
  PartitionStream stream;
  stream.fixed_largest_ = true;
  // First partition in the order with this largest part: greedy fill.
  const std::int64_t rest = n - largest;
  const std::int64_t q = rest / largest, r = rest % largest;
  stream.descending_.push_back({largest, 1 + q});
  if (r > 0) stream.descending_.push_back({r, 1});
  stream.publish();
  return stream;
}

void PartitionStream::publish() {
  std::vector<PartRun> ascending(descending_.rbegin(), descending_.rend());
  current_ = Partition::from_runs(std::move(ascending));
}

void PartitionStream::advance() {
  if (done_) return;
  // Locate the smallest part greater than one and remove one copy of it; the
  // freed amount plus all the ones is refilled greedily with the next size down.
  std::int64_t ones = 0;
  if (descending_.empty() || (descending_.size() == 1 && descending_.back().part == 1)) {
    done_ = true;
    return;
  }
  if (descending_.back().part == 1) {
    ones = descending_.back().multiplicity;
    descending_.pop_back();
  }
  PartRun& target = descending_.back();
  if (fixed_largest_ && descending_.size() == 1 && target.multiplicity == 1) {
    done_ = true;
    return;
  }
  const std::int64_t x = target.part;
  if (--target.multiplicity == 0) descending_.pop_back();
  const std::int64_t refill = ones + x;
  const std::int64_t y = x - 1;
  descending_.push_back({y, refill / y});
  if (refill % y != 0) descending_.push_back({refill % y, 1});
  publish();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::int64_t> partition_table(std::int64_t n) {
  if (n < 0) throw std::domain_error("partition_count: negative n");
  std::vector<std::int64_t> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    int128 sum = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t pent1 = j * (3 * j - 1) / 2;
      if (pent1 > i) break;
      const int sign = (j % 2 == 1) ? 1 : -1;
      sum += sign * static_cast<int128>(p[static_cast<std::size_t>(i - pent1)]);
      const std::int64_t pent2 = j * (3 * j + 1) / 2;
      if (pent2 <= i) sum += sign * static_cast<int128>(p[static_cast<std::size_t>(i - pent2)]);
    }
    p[static_cast<std::size_t>(i)] = narrow(sum);
  }
  return p;
}

}  // namespace

std::int64_t partition_count(std::int64_t n) {
  return partition_table(n).back();
}

std::int64_t partitions_pairs(std::int64_t r) {
  const auto p = partition_table(r);
  int128 sum = 0;
  for (std::int64_t s = 0; s <= r; ++s) {
    sum += static_cast<int128>(p[static_cast<std::size_t>(s)]) * p[static_cast<std::size_t>(r - s)];
  }
  return narrow(sum);
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t parse_positive(std::string_view token, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last || value < 1) {
    throw std::invalid_argument("malformed partition '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<PartRun> runs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = text.find_first_of("+,", start);
    const std::string_view token =
        trim(text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start));
    const std::size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      runs.push_back({parse_positive(token, text), 1});
    } else {
      runs.push_back({parse_positive(token.substr(0, caret), text),
                      parse_positive(token.substr(caret + 1), text)});
    }
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return Partition::from_runs(std::move(runs));
}

}  // namespace extquot
