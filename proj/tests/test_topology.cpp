#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <cstdlib>

#include "extquot/numtheory.hpp"
#include "extquot/parallel.hpp"
#include "extquot/topology.hpp"
#include "oracles.hpp"

using namespace extquot;

using Ranks = std::vector<std::int64_t>;

TEST_SUITE("topology") {

TEST_CASE("binomial") {
  for (std::int64_t n = 0; n <= 30; ++n) {
    for (std::int64_t j = -1; j <= n + 1; ++j) REQUIRE(binomial(n, j) == oracle::binomial(n, j));
  }
  CHECK(binomial(62, 31) == 465428353255261088LL);
  CHECK_THROWS_AS(binomial(63, 1), std::overflow_error);
}

TEST_CASE("betti examples") {
  CHECK(betti(6, 1).ranks == Ranks{20, 9, 1});
  CHECK(betti(8, 2).ranks == Ranks{40, 27, 5});
  CHECK(betti(1, 1).ranks == Ranks{1});
  CHECK_THROWS_AS(betti(6, 4), std::domain_error);
  CHECK(ktheory_ranks(6, 1) == KTheoryRanks{21, 9});
  CHECK(ktheory_ranks(16, 4) == KTheoryRanks{609, 569});
  CHECK(ktheory_ranks(20, 10) == KTheoryRanks{2004, 1956});
  CHECK(euler_characteristic(6, 1) == 12);
  CHECK(euler_characteristic(12, 1) == 28);
  CHECK(euler_characteristic(1, 1) == 1);
}

TEST_CASE("betti matches the brute-force sum for n <= 28") {
  for (std::int64_t n = 1; n <= 28; ++n) {
    for (std::int64_t k : divisors(n)) REQUIRE(betti(n, k).ranks == oracle::betti_brute(n, k));
  }
}

TEST_CASE("betti does not depend on the worker count") {
  for (std::int64_t n : {17, 30, 36}) {
    for (std::int64_t k : divisors(n)) {
      const auto one = betti(n, k, 1);
      REQUIRE(betti(n, k, 3) == one);
      REQUIRE(betti(n, k, 8) == one);
    }
  }
}

TEST_CASE("duality of betti numbers for n <= 30") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t k : divisors(n)) REQUIRE(betti(n, k).ranks == betti(n, n / k).ranks);
  }
}

TEST_CASE("square-free n gives the same betti numbers for every k") {
  for (std::int64_t n : {6, 10, 14, 15, 21, 30}) {
    const auto base = betti(n, 1).ranks;
    for (std::int64_t k : divisors(n)) REQUIRE(betti(n, k).ranks == base);
  }
}

TEST_CASE("euler characteristic and top betti for n <= 45") {
  for (std::int64_t n = 1; n <= 45; ++n) {
    const BettiVector b = betti(n, 1);
    REQUIRE(euler_characteristic(b) == oracle::sigma(n));
    const TopBetti t = top_betti(n);
    REQUIRE(t.degree + 1 == static_cast<std::int64_t>(b.ranks.size()));
    REQUIRE(t.rank == b.ranks.back());
  }
  CHECK(top_betti(8).degree == 2);
  CHECK(top_betti(8).rank == 5);
  CHECK(top_betti(10).degree == 3);
  CHECK(top_betti(10).rank == 1);
  CHECK(top_betti(6).degree == 2);
  CHECK(top_betti(6).rank == 1);
  CHECK(top_betti(2).rank == 3);
  CHECK_THROWS_AS(top_betti(0), std::domain_error);
}

TEST_CASE("catalog betti agrees with streamed betti, complex and real, n <= 30") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t k : divisors(n)) {
      const auto streamed = betti(n, k);
      REQUIRE(betti_from_catalog(decompose_complex(n, k)) == streamed);
      REQUIRE(betti_from_catalog(decompose_real(n, k)) == streamed);
    }
  }
}

TEST_CASE("duality reports") {
  const auto r12 = duality_report(12, 2);
  CHECK(r12.consistent());
  CHECK(ktheory_ranks(r12.betti) == KTheoryRanks{176, 144});
  CHECK(ktheory_ranks(r12.dual_betti) == KTheoryRanks{176, 144});
  CHECK(duality_report(16, 4).consistent());
  CHECK(duality_report(1, 1).consistent());

  for (std::int64_t k : {1, 2, 3, 6}) {
    const auto r = duality_report(6, k);
    CHECK(r.consistent());
    std::vector<std::string> names;
    for (const auto& mu : r.singularity_differences()) names.push_back(mu.to_string());
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"1+1+1+1+1+1", "1+1+2+2", "2+2+2"});
  }
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t k : divisors(n)) REQUIRE(duality_report(n, k).consistent());
  }
}

}  // TEST_SUITE

TEST_SUITE("topology") {

TEST_CASE("worker count resolution and failure propagation") {
  ::unsetenv("EXTQUOT_JOBS");
  CHECK(resolve_jobs(5) == 5);
  CHECK(resolve_jobs() >= 1);
  ::setenv("EXTQUOT_JOBS", "3", 1);
  CHECK(resolve_jobs(5) == 3);
  ::unsetenv("EXTQUOT_JOBS");
  CHECK_THROWS_AS(parallel_for(16, 4,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("unit 7");
                               }),
                  std::runtime_error);
}

}  // TEST_SUITE
