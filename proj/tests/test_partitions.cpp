#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "extquot/partitions.hpp"
#include "oracles.hpp"

using namespace extquot;

namespace {

Partition from(std::vector<std::int64_t> parts) { return Partition::from_parts(parts); }

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("construction and text") {
  const Partition mu = from({4, 2, 2, 4, 2, 2});
  CHECK(mu.n() == 16);
  CHECK(mu.to_string() == "2+2+2+2+4+4");
  CHECK(mu.distinct_parts() == 2);
  CHECK(mu.total_parts() == 6);
  CHECK(mu.parts() == std::vector<std::int64_t>{2, 2, 2, 2, 4, 4});
  CHECK(Partition().to_string() == "0");
  CHECK(Partition::from_runs({{4, 1}, {2, 2}, {4, 1}}) == from({2, 2, 4, 4}));
  CHECK_THROWS_AS(from({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_runs({{2, 0}}), std::invalid_argument);
}

TEST_CASE("parse_partition accepts both syntaxes") {
  CHECK(parse_partition("1+1+2+2") == from({1, 1, 2, 2}));
  CHECK(parse_partition("2,2,1,1") == from({1, 1, 2, 2}));
  CHECK(parse_partition("1^2,2^2") == from({1, 1, 2, 2}));
  CHECK(parse_partition("2^4+4^2") == from({2, 2, 2, 2, 4, 4}));
  CHECK(parse_partition(" 4, 4 ,4,4 ") == from({4, 4, 4, 4}));
  for (const char* bad : {"", "1+", "+1", "a", "2^", "2^0", "0", "-1", "1++2", "1.5", "2^x"}) {
    CHECK_THROWS_AS(parse_partition(bad), std::invalid_argument);
  }
}

TEST_CASE("invariants") {
  {
    const auto inv = invariants(from({2, 2, 2, 2, 4, 4}));
    CHECK(inv.g == 2);
    CHECK(inv.m == 2);
    CHECK(inv.b == 2);
    CHECK(inv.c == 6);
    CHECK(inv.p == std::vector<std::int64_t>{2, 1, 1});
    CHECK(inv.p_at(4) == 0);
  }
  {
    const auto inv = invariants(from({6}));
    CHECK(inv.g == 6);
    CHECK(inv.m == 1);
    CHECK(inv.b == 1);
    CHECK(inv.c == 1);
    CHECK(inv.p.empty());
  }
  {
    const auto inv = invariants(from({1, 1, 1, 1, 1, 1}));
    CHECK(inv.g == 1);
    CHECK(inv.m == 6);
    CHECK(inv.p == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  }
}

TEST_CASE("invariants match direct computation for n <= 40") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (const Partition& mu : PartitionStream(n)) {
      const auto inv = invariants(mu);
      const auto ref = oracle::invariants(mu.parts());
      REQUIRE(inv.g == ref.g);
      REQUIRE(inv.m == ref.m);
      REQUIRE(inv.b == ref.b);
      REQUIRE(inv.c == ref.c);
      REQUIRE(n % inv.g == 0);
      for (const auto& [part, mult] : ref.mult) REQUIRE(mult % inv.m == 0);
      REQUIRE(std::accumulate(inv.p.begin(), inv.p.end(), std::int64_t{0}) == inv.c - inv.b);
      if (!inv.p.empty()) REQUIRE(inv.p.back() != 0);
    }
  }
}

TEST_CASE("stream enumerates each partition once in decreasing lex order") {
  for (std::int64_t n = 1; n <= 22; ++n) {
    std::vector<std::vector<std::int64_t>> seen;
    for (const Partition& mu : PartitionStream(n)) {
      auto desc = mu.parts();
      std::reverse(desc.begin(), desc.end());
      seen.push_back(desc);
    }
    REQUIRE(seen == oracle::partitions(n));
  }
  std::int64_t count = 0;
  for ([[maybe_unused]] const Partition& mu : PartitionStream(0)) ++count;
  CHECK(count == 1);
  CHECK_THROWS_AS(PartitionStream(-1), std::domain_error);
}

TEST_CASE("stream counts agree with the pentagonal recurrence up to 60") {
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(6) == 11);
  CHECK(partition_count(45) == 89134);
  CHECK(partition_count(60) == 966467);
  const auto coeffs = oracle::eta_power_series(1, 60);
  for (std::int64_t n = 0; n <= 60; ++n) {
    REQUIRE(partition_count(n) == coeffs[static_cast<std::size_t>(n)]);
    if (n > 50 && n < 60) continue;
    std::int64_t streamed = 0;
    for (PartitionStream s(n); s.current(); s.advance()) ++streamed;
    REQUIRE(streamed == partition_count(n));
  }
}

TEST_CASE("largest-part substreams cover the whole stream") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    std::int64_t total = 0;
    for (std::int64_t largest = 1; largest <= n; ++largest) {
      for (const Partition& mu : PartitionStream::with_largest_part(n, largest)) {
        REQUIRE(mu.runs().back().part == largest);
        ++total;
      }
    }
    REQUIRE(total == partition_count(n));
  }
  CHECK_THROWS_AS(PartitionStream::with_largest_part(5, 6), std::domain_error);
}

TEST_CASE("partitions_pairs matches the squared generating function") {
  CHECK(partitions_pairs(0) == 1);
  CHECK(partitions_pairs(2) == 5);
  const auto coeffs = oracle::eta_power_series(2, 20);
  for (std::int64_t r = 0; r <= 20; ++r) REQUIRE(partitions_pairs(r) == coeffs[static_cast<std::size_t>(r)]);
}

}  // TEST_SUITE
