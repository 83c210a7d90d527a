#pragma once

#include <span>
#include <string_view>

#include "clm/group/cayley_group.hpp"

namespace clm::group {

enum class Preset { cyclic, abelian_product, dihedral, quaternion, symmetric, alternating };

// parameter: order for cyclic, dihedral (2m, m >= 2) and quaternion (4m, m >= 2,
// the dicyclic group; 8 gives Q8); degree for symmetric and alternating;
// rank k for abelian_product, meaning (C_2)^k.
CayleyGroup standard_group(Preset preset, int parameter, std::size_t cap = kDefaultCayleyCap);

// C_{n_1} x ... x C_{n_k}.
CayleyGroup abelian_group(std::span<const int> cyclic_orders, std::size_t cap = kDefaultCayleyCap);

// Text form used by the CLI: factors joined by 'x', each one of c<n>, d<n>,
// q<n>, s<n>, a<n> with n as above, e.g. "q8", "a5", "d8xc2", "c2xc4xc4".
CayleyGroup group_from_name(std::string_view name, std::size_t cap = kDefaultCayleyCap);

}  // namespace clm::group
