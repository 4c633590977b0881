#pragma once

// Components of the extended quotient S_k//W for SL_n(C)/C_k.
//
// Each partition mu of n contributes one family of components per element
// omega of C_h, h = gcd(g(mu), k). A component is a torus (C^x)^(b-1) times a
// cyclic quotient singularity A^(c-b)/C_d, d = gcd(m, k/|omega|), repeated
// gcd(g/|omega|, n/k) times.

#include <compare>
#include <cstdint>
#include <vector>

#include "extquot/partitions.hpp"

namespace extquot {

enum class Form { complex, real };

/// omega = exp(2 pi i * exponent / h), an element of C_h with h = gcd(g, k).
struct OmegaLabel {
  std::int64_t h = 1;
  std::int64_t exponent = 0;
  std::int64_t order = 1;  // h / gcd(h, exponent)
  auto operator<=>(const OmegaLabel&) const = default;
};

/// A^ambient_dim / C_group_order, the generator acting on coordinate i by
/// exp(2 pi i * weights[i] / group_order). Weights are reduced mod the order.
struct CyclicSingularity {
  std::int64_t ambient_dim = 0;
  std::int64_t group_order = 1;
  std::vector<std::int64_t> weights;

  bool smooth() const { return group_order == 1; }
  auto operator<=>(const CyclicSingularity&) const = default;
};

struct ComplexComponent {
  Partition partition;
  OmegaLabel omega;
  std::int64_t torus_dim = 0;
  CyclicSingularity singularity;
  std::int64_t multiplicity = 1;  // |X_{mu,omega}|
};

template <class Component>
struct QuotientCatalog {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<Component> entries;  // partition order, then omega exponent

  /// Number of components counted with multiplicity.
  std::int64_t total_components() const {
    std::int64_t total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
  }
};

using ComplexCatalog = QuotientCatalog<ComplexComponent>;

/// Throws std::domain_error unless n >= 1, k >= 1 and k | n.
void require_divides(std::int64_t k, std::int64_t n);

/// The h = gcd(g(mu), k) labels, exponents 0 .. h-1.
std::vector<OmegaLabel> enumerate_omegas(const Partition& mu, std::int64_t k);

/// Weight l mod d for every distinct part j and every l in 1 .. m_j - 1,
/// listed by increasing l (so weight l appears p_l(mu) times).
CyclicSingularity singularity_weights(const Partition& mu, std::int64_t d);

/// gcd(m(mu), k/|omega|).
std::int64_t cyclic_order(const Partition& mu, const OmegaLabel& omega, std::int64_t k);

ComplexComponent complex_component(const Partition& mu, const OmegaLabel& omega, std::int64_t k);

/// |Y_mu| = (g/a) * pillai(a), a = gcd(g, n/g, k, n/k).
std::int64_t y_mu_count(const Partition& mu, std::int64_t k);

ComplexCatalog decompose_complex(std::int64_t n, std::int64_t k);

/// Complex components of a single partition, in omega order.
std::vector<ComplexComponent> complex_components(const Partition& mu, std::int64_t k);

/// Representative of the weight vector under permutations and multiplication
/// by units mod d: the lexicographically smallest sorted multiset u*w mod d.
CyclicSingularity canonical_singularity(const CyclicSingularity& s);

/// Normal form of the quotient variety: the action is made faithful and the
/// subgroup generated by pseudo-reflections is divided out (the quotient by
/// it is again affine space), repeated until the group is small. The result
/// is then put in canonical form. Two diagonal cyclic quotients are
/// isomorphic as varieties exactly when these normal forms agree.
CyclicSingularity reduced_singularity(const CyclicSingularity& s);

bool singularities_isomorphic(const CyclicSingularity& a, const CyclicSingularity& b);

}  // namespace extquot
