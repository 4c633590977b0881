#include "extquot/real_quotient.hpp"

#include <numeric>
#include <stdexcept>

#include "extquot/numtheory.hpp"

namespace extquot {

bool fiber_action_preserves_orientation(std::int64_t c, std::int64_t d) {
  if (c < 1 || d < 1) throw std::domain_error("fiber orientation: c and d must be positive");
  return c % 2 == 1 || two_adic_valuation(c) > two_adic_valuation(d);
}

RealComponent real_component(const Partition& mu, const OmegaLabel& omega, std::int64_t k) {
  require_divides(k, mu.n());
  const PartitionInvariants inv = invariants(mu);
  if (inv.g % omega.order != 0) throw std::logic_error("omega order does not divide g(mu)");

  RealComponent out;
  out.partition = mu;
  out.omega = omega;
  out.base_torus_dim = inv.b - 1;
  out.cyclic_order = cyclic_order(mu, omega, k);
  out.multiplicity = std::gcd(inv.g / omega.order, mu.n() / k);
  for (const PartRun& run : mu.runs()) {
    out.fiber_simplex_dims.push_back(run.multiplicity - 1);
    out.join_counts.push_back(run.multiplicity / out.cyclic_order);
  }
  out.action_orientation_preserving = fiber_action_preserves_orientation(inv.c, out.cyclic_order);
  if (k == 1) out.bundle_orientable = bundle_orientable_k1(mu);
  out.fiber_action = singularity_weights(mu, out.cyclic_order);
  return out;
}

bool bundle_orientable_k1(const Partition& mu) {
  const std::int64_t g = invariants(mu).g;
  if (g == 0) return true;
  // Reduce both vectors mod 2. The first is never zero since its entries
  // are coprime, so independence means the second is neither zero nor equal
  // to the first.
  bool second_zero = true, equal = true;
  for (const PartRun& run : mu.runs()) {
    const bool a = (run.part / g) % 2 != 0;
    const bool b = (run.multiplicity - 1) % 2 != 0;
    second_zero = second_zero && !b;
    equal = equal && a == b;
  }
  const bool independent = !second_zero && !equal;
  return !independent;
}

std::vector<RealComponent> real_components(const Partition& mu, std::int64_t k) {
  std::vector<RealComponent> out;
  for (const OmegaLabel& omega : enumerate_omegas(mu, k)) out.push_back(real_component(mu, omega, k));
  return out;
}

RealCatalog decompose_real(std::int64_t n, std::int64_t k) {
  require_divides(k, n);
  RealCatalog catalog{n, k, {}};
  for (const Partition& mu : PartitionStream(n)) {
    auto components = real_components(mu, k);
    catalog.entries.insert(catalog.entries.end(), std::make_move_iterator(components.begin()),
                           std::make_move_iterator(components.end()));
  }
  return catalog;
}

}  // namespace extquot
