#include "extquot/complex_quotient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "extquot/numtheory.hpp"

namespace extquot {

void require_divides(std::int64_t k, std::int64_t n) {
  if (n < 1 || k < 1) {
    throw std::domain_error("n and k must be positive (n = " + std::to_string(n) +
                            ", k = " + std::to_string(k) + ")");
  }
  if (n % k != 0) {
    throw std::domain_error("k = " + std::to_string(k) + " does not divide n = " + std::to_string(n));
  }
}

std::vector<OmegaLabel> enumerate_omegas(const Partition& mu, std::int64_t k) {
  require_divides(k, mu.n());
  const std::int64_t h = std::gcd(invariants(mu).g, k);
  std::vector<OmegaLabel> out;
  out.reserve(static_cast<std::size_t>(h));
  for (std::int64_t e = 0; e < h; ++e) out.push_back({h, e, h / std::gcd(h, e)});
  return out;
}

CyclicSingularity singularity_weights(const Partition& mu, std::int64_t d) {
  if (d < 1) throw std::domain_error("singularity_weights: group order must be positive");
  const PartitionInvariants inv = invariants(mu);
  CyclicSingularity s;
  s.ambient_dim = inv.c - inv.b;
  s.group_order = d;
  s.weights.reserve(static_cast<std::size_t>(s.ambient_dim));
  for (std::int64_t l = 1; l <= static_cast<std::int64_t>(inv.p.size()); ++l) {
    s.weights.insert(s.weights.end(), static_cast<std::size_t>(inv.p_at(l)), l % d);
  }
  return s;
}

std::int64_t cyclic_order(const Partition& mu, const OmegaLabel& omega, std::int64_t k) {
  if (omega.order < 1 || k % omega.order != 0) {
    throw std::logic_error("omega of order " + std::to_string(omega.order) +
                           " is not an element of C_" + std::to_string(k));
  }
  return std::gcd(invariants(mu).m, k / omega.order);
}

ComplexComponent complex_component(const Partition& mu, const OmegaLabel& omega, std::int64_t k) {
  require_divides(k, mu.n());
  const PartitionInvariants inv = invariants(mu);
  if (inv.g % omega.order != 0) {
    throw std::logic_error("omega order does not divide g(mu)");
  }
  ComplexComponent out;
  out.partition = mu;
  out.omega = omega;
  out.torus_dim = inv.b - 1;
  out.multiplicity = std::gcd(inv.g / omega.order, mu.n() / k);
  out.singularity = singularity_weights(mu, cyclic_order(mu, omega, k));
  return out;
}

std::int64_t y_mu_count(const Partition& mu, std::int64_t k) {
  require_divides(k, mu.n());
  const std::int64_t n = mu.n();
  const std::int64_t g = invariants(mu).g;
  const std::int64_t a = gcd_many({g, n / g, k, n / k});
  return narrow(static_cast<int128>(g / a) * pillai(a));
}

std::vector<ComplexComponent> complex_components(const Partition& mu, std::int64_t k) {
  std::vector<ComplexComponent> out;
  for (const OmegaLabel& omega : enumerate_omegas(mu, k)) out.push_back(complex_component(mu, omega, k));
  return out;
}

ComplexCatalog decompose_complex(std::int64_t n, std::int64_t k) {
  require_divides(k, n);
  ComplexCatalog catalog{n, k, {}};
  for (const Partition& mu : PartitionStream(n)) {
    auto components = complex_components(mu, k);
    catalog.entries.insert(catalog.entries.end(), std::make_move_iterator(components.begin()),
                           std::make_move_iterator(components.end()));
  }
  return catalog;
}

// ---------------------------------------------------------------------------

CyclicSingularity canonical_singularity(const CyclicSingularity& s) {
  const std::int64_t d = s.group_order;
  if (d < 1) throw std::domain_error("canonical_singularity: group order must be positive");
  if (static_cast<std::int64_t>(s.weights.size()) != s.ambient_dim) {
    throw std::invalid_argument("canonical_singularity: weight count differs from ambient dimension");
  }
  CyclicSingularity best;
  bool have_best = false;
  for (std::int64_t u = 1; u <= std::max<std::int64_t>(d - 1, 1); ++u) {
    if (std::gcd(u, d) != 1) continue;
    CyclicSingularity candidate{s.ambient_dim, d, {}};
    candidate.weights.reserve(s.weights.size());
    for (std::int64_t w : s.weights) {
      candidate.weights.push_back(narrow(static_cast<int128>(((w % d) + d) % d) * u % d));
    }
    std::sort(candidate.weights.begin(), candidate.weights.end());
    if (!have_best || candidate.weights < best.weights) {
      best = std::move(candidate);
      have_best = true;
    }
  }
  return best;
}

CyclicSingularity reduced_singularity(const CyclicSingularity& s) {
  CyclicSingularity cur = canonical_singularity(s);
  for (;;) {
    std::int64_t& d = cur.group_order;
    if (d == 1) break;

    // Effective group: divide out the kernel of the action.
    std::int64_t kernel = d;
    for (std::int64_t w : cur.weights) kernel = std::gcd(kernel, w);
    if (kernel > 1) {
      d /= kernel;
      for (std::int64_t& w : cur.weights) w /= kernel;
      continue;
    }

    // Elements fixing every coordinate but i form the cyclic subgroup
    // generated by g^{L_i}; it acts on z_i with order e_i. These are the
    // pseudo-reflections. Dividing them out replaces z_i by z_i^{e_i}.
    const std::size_t dim = cur.weights.size();
    std::vector<std::int64_t> reflection_order(dim, 1);
    bool any = false;
    for (std::size_t i = 0; i < dim; ++i) {
      std::int64_t step = 1;
      for (std::size_t j = 0; j < dim; ++j) {
        if (j != i) step = std::lcm(step, d / std::gcd(d, cur.weights[j]));
      }
      const std::int64_t e = d / std::gcd(d, narrow(static_cast<int128>(step) * cur.weights[i] % d));
      reflection_order[i] = e;
      any = any || e > 1;
    }
    if (!any) break;
    for (std::size_t i = 0; i < dim; ++i) {
      cur.weights[i] = narrow(static_cast<int128>(cur.weights[i]) * reflection_order[i] % d);
    }
  }
  if (cur.group_order == 1) std::fill(cur.weights.begin(), cur.weights.end(), 0);
  return canonical_singularity(cur);
}

bool singularities_isomorphic(const CyclicSingularity& a, const CyclicSingularity& b) {
  return reduced_singularity(a) == reduced_singularity(b);
}

}  // namespace extquot
