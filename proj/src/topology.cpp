#include "extquot/topology.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <numeric>
#include <stdexcept>

#include "extquot/numtheory.hpp"
#include "extquot/parallel.hpp"

namespace extquot {

namespace {

// Component counts bucketed by torus dimension, then expanded with the
// binomial Betti numbers of tori.
BettiVector expand_torus_counts(std::int64_t n, std::int64_t k,
                                const std::vector<std::int64_t>& by_dim) {
  std::int64_t top = -1;
  for (std::size_t t = 0; t < by_dim.size(); ++t) {
    if (by_dim[t] != 0) top = static_cast<std::int64_t>(t);
  }
  BettiVector out{n, k, std::vector<std::int64_t>(static_cast<std::size_t>(top + 1), 0)};
  for (std::int64_t t = 0; t <= top; ++t) {
    const std::int64_t count = by_dim[static_cast<std::size_t>(t)];
    for (std::int64_t j = 0; j <= t; ++j) {
      int128 term = static_cast<int128>(count) * binomial(t, j);
      out.ranks[static_cast<std::size_t>(j)] = narrow(out.ranks[static_cast<std::size_t>(j)] + term);
    }
  }
  return out;
}

template <class Catalog>
BettiVector betti_from_entries(const Catalog& catalog, auto torus_of) {
  std::vector<std::int64_t> by_dim;
  for (const auto& e : catalog.entries) {
    const auto t = static_cast<std::size_t>(torus_of(e));
    if (by_dim.size() <= t) by_dim.resize(t + 1, 0);
    by_dim[t] += e.multiplicity;
  }
  return expand_torus_counts(catalog.n, catalog.k, by_dim);
}

std::multiset<CyclicSingularity> singularity_multiset(const std::vector<ComplexComponent>& components) {
  std::multiset<CyclicSingularity> out;
  for (const auto& c : components) {
    const CyclicSingularity reduced = reduced_singularity(c.singularity);
    for (std::int64_t i = 0; i < c.multiplicity; ++i) out.insert(reduced);
  }
  return out;
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t j) {
  if (n < 0 || j < 0 || j > n) return 0;
  // One Pascal row at a time; entries up to C(62, 31) fit in 63 bits.
  if (n > 62) throw std::overflow_error("binomial: n too large for 64-bit Pascal rows");
  std::vector<std::int64_t> row{1};
  for (std::int64_t r = 1; r <= n; ++r) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(r + 1), 1);
    for (std::int64_t i = 1; i < r; ++i) {
      next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)] + row[static_cast<std::size_t>(i)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(j)];
}

BettiVector betti(std::int64_t n, std::int64_t k, unsigned jobs) {
  require_divides(k, n);
  // One work unit per largest part; each unit counts |Y_mu| by b(mu) - 1.
  std::vector<std::vector<std::int64_t>> partial(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t unit) {
    auto& by_dim = partial[unit];
    const std::int64_t largest = static_cast<std::int64_t>(unit) + 1;
    for (PartitionStream stream = PartitionStream::with_largest_part(n, largest); stream.current();
         stream.advance()) {
      const Partition& mu = *stream.current();
      const auto t = static_cast<std::size_t>(mu.distinct_parts() - 1);
      if (by_dim.size() <= t) by_dim.resize(t + 1, 0);
      by_dim[t] = narrow(by_dim[t] + static_cast<int128>(y_mu_count(mu, k)));
    }
  });
  std::vector<std::int64_t> by_dim;
  for (const auto& unit : partial) {
    if (by_dim.size() < unit.size()) by_dim.resize(unit.size(), 0);
    for (std::size_t t = 0; t < unit.size(); ++t) by_dim[t] = narrow(by_dim[t] + static_cast<int128>(unit[t]));
  }
  return expand_torus_counts(n, k, by_dim);
}

BettiVector betti_from_catalog(const ComplexCatalog& catalog) {
  return betti_from_entries(catalog, [](const ComplexComponent& c) { return c.torus_dim; });
}

BettiVector betti_from_catalog(const RealCatalog& catalog) {
  return betti_from_entries(catalog, [](const RealComponent& c) { return c.base_torus_dim; });
}

KTheoryRanks ktheory_ranks(const BettiVector& b) {
  KTheoryRanks out;
  for (std::size_t j = 0; j < b.ranks.size(); ++j) (j % 2 == 0 ? out.k0 : out.k1) += b.ranks[j];
  return out;
}

KTheoryRanks ktheory_ranks(std::int64_t n, std::int64_t k, unsigned jobs) {
  return ktheory_ranks(betti(n, k, jobs));
}

std::int64_t euler_characteristic(const BettiVector& b) {
  const KTheoryRanks kr = ktheory_ranks(b);
  return kr.k0 - kr.k1;
}

std::int64_t euler_characteristic(std::int64_t n, std::int64_t k, unsigned jobs) {
  return euler_characteristic(betti(n, k, jobs));
}

TopBetti top_betti(std::int64_t n) {
  if (n < 1) throw std::domain_error("top_betti: n must be positive");
  TopBetti out;
  out.degree = (isqrt(8 * n + 1) - 3) / 2;
  const std::int64_t parts = out.degree + 1;
  out.remainder = n - parts * (parts + 1) / 2;
  out.rank = out.degree == 0 ? divisor_sigma(n) : partitions_pairs(out.remainder);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Partition> DualityReport::singularity_differences() const {
  std::vector<Partition> out;
  for (const auto& p : partitions) {
    if (p.singularities_differ) out.push_back(p.partition);
  }
  return out;
}

DualityReport duality_report(std::int64_t n, std::int64_t k) {
  require_divides(k, n);
  DualityReport report;
  report.n = n;
  report.k = k;
  report.dual_k = n / k;
  report.betti = betti(n, k);
  report.dual_betti = betti(n, report.dual_k);
  report.betti_equal = report.betti.ranks == report.dual_betti.ranks;
  report.counts_equal = true;
  report.torus_counts_equal = true;

  for (const Partition& mu : PartitionStream(n)) {
    PartitionDuality row;
    row.partition = mu;
    row.count = y_mu_count(mu, k);
    row.dual_count = y_mu_count(mu, report.dual_k);
    const auto here = complex_components(mu, k);
    const auto there = complex_components(mu, report.dual_k);
    for (const auto& c : here) row.torus_counts[c.torus_dim] += c.multiplicity;
    for (const auto& c : there) row.dual_torus_counts[c.torus_dim] += c.multiplicity;
    row.singularities_differ = singularity_multiset(here) != singularity_multiset(there);
    report.counts_equal = report.counts_equal && row.count == row.dual_count;
    report.torus_counts_equal = report.torus_counts_equal && row.torus_counts == row.dual_torus_counts;
    report.partitions.push_back(std::move(row));
  }
  return report;
}

}  // namespace extquot
