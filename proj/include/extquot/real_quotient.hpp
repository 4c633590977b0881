#pragma once

// Components of T_k//W for SU_n(C)/C_k: bundles of polysimplices over a
// compact torus, divided by a cyclic group acting on the fibres.
//
// The bundles are described by their descriptor data only; the gluing maps
// themselves are not built.

#include <cstdint>
#include <optional>
#include <vector>

#include "extquot/complex_quotient.hpp"

namespace extquot {

struct RealComponent {
  Partition partition;
  OmegaLabel omega;
  std::int64_t base_torus_dim = 0;
  /// m_j - 1 for each distinct part j, in increasing part order.
  std::vector<std::int64_t> fiber_simplex_dims;
  /// d = gcd(m, k/|omega|), the order of the group acting on the fibre.
  std::int64_t cyclic_order = 1;
  std::int64_t multiplicity = 1;
  /// m_j / d: each fibre simplex is a join of this many (d-1)-simplices,
  /// each rotated cyclically by the generator.
  std::vector<std::int64_t> join_counts;
  /// Whether the generator preserves the orientation of the fibre.
  bool action_orientation_preserving = true;
  /// Whether the bundle E_{mu,1} is orientable; present only when k = 1.
  std::optional<bool> bundle_orientable;
  /// Linearisation of the fibre action at the barycentre, as weights of
  /// C_d on the (c-b)-dimensional tangent space. Identical to the complex
  /// singularity weights of the matching complex component.
  CyclicSingularity fiber_action;
};

using RealCatalog = QuotientCatalog<RealComponent>;

/// c odd, or v_2(c) > v_2(d) (the 2-adic norm of c is strictly smaller).
bool fiber_action_preserves_orientation(std::int64_t c, std::int64_t d);

RealComponent real_component(const Partition& mu, const OmegaLabel& omega, std::int64_t k);

/// For k = 1: E_{mu,1} is non-orientable iff (j/g)_j and (m_j - 1)_j are
/// linearly independent over Z/2. Returns true when orientable.
bool bundle_orientable_k1(const Partition& mu);

std::vector<RealComponent> real_components(const Partition& mu, std::int64_t k);

RealCatalog decompose_real(std::int64_t n, std::int64_t k);

}  // namespace extquot
