#pragma once

// Cohomology ranks of the extended quotients.
//
// Every component is homotopy equivalent to a torus of dimension b(mu) - 1
// (the singular or polysimplicial factor retracts to a point), so the Betti
// numbers are b_j = sum_mu |Y_mu| * C(b(mu) - 1, j). Real and complex
// quotients have the same ranks; K-theory ranks are the even and odd sums.

#include <cstdint>
#include <map>
#include <vector>

#include "extquot/complex_quotient.hpp"
#include "extquot/real_quotient.hpp"

namespace extquot {

struct BettiVector {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> ranks;  // b_0 .. b_D
  bool operator==(const BettiVector&) const = default;
};

struct KTheoryRanks {
  std::int64_t k0 = 0;
  std::int64_t k1 = 0;
  bool operator==(const KTheoryRanks&) const = default;
};

/// C(n, j) by Pascal's rule; 0 outside 0 <= j <= n.
std::int64_t binomial(std::int64_t n, std::int64_t j);

/// Streams the partitions of n; only g(mu) and b(mu) are needed per
/// partition. Work is split by largest part over `jobs` threads.
BettiVector betti(std::int64_t n, std::int64_t k, unsigned jobs = 1);

BettiVector betti_from_catalog(const ComplexCatalog& catalog);
BettiVector betti_from_catalog(const RealCatalog& catalog);

KTheoryRanks ktheory_ranks(const BettiVector& betti);
KTheoryRanks ktheory_ranks(std::int64_t n, std::int64_t k, unsigned jobs = 1);

std::int64_t euler_characteristic(const BettiVector& betti);
std::int64_t euler_characteristic(std::int64_t n, std::int64_t k, unsigned jobs = 1);

struct TopBetti {
  std::int64_t degree = 0;     // floor((sqrt(8n+1) - 3) / 2)
  std::int64_t rank = 0;
  std::int64_t remainder = 0;  // r = n - (1 + 2 + ... + (degree + 1))
};

/// Top nonzero Betti number of S//W (k = 1) without enumerating partitions.
/// For degree >= 1 the top classes come from partitions with the maximal
/// number of distinct parts, all of which have g = 1, and the rank is
/// P_2(r). In degree 0 (n <= 2) every component is a point and partitions
/// j^(n/j) contribute g = j each, giving sigma(n).
TopBetti top_betti(std::int64_t n);

struct PartitionDuality {
  Partition partition;
  std::int64_t count = 0;       // |Y_mu| for k
  std::int64_t dual_count = 0;  // |Y_mu| for n/k
  /// torus dimension -> number of components, for k and n/k.
  std::map<std::int64_t, std::int64_t> torus_counts;
  std::map<std::int64_t, std::int64_t> dual_torus_counts;
  /// Whether the multisets of singularities (up to isomorphism of the
  /// quotient varieties, counted with multiplicity) differ.
  bool singularities_differ = false;
};

struct DualityReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t dual_k = 0;
  BettiVector betti;
  BettiVector dual_betti;
  bool betti_equal = false;
  bool counts_equal = false;
  bool torus_counts_equal = false;
  std::vector<PartitionDuality> partitions;

  bool consistent() const { return betti_equal && counts_equal && torus_counts_equal; }
  std::vector<Partition> singularity_differences() const;
};

DualityReport duality_report(std::int64_t n, std::int64_t k);

}  // namespace extquot
