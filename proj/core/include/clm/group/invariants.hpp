#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "clm/group/cayley_group.hpp"

namespace clm::group {

struct GroupFingerprint {
  std::size_t order = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> order_profile;  // (element order, count), ascending
  std::size_t center_order = 0;
  std::size_t abelianization_order = 0;  // |G / [G,G]|
  int derived_length = 0;                // -1 when the derived series stalls above {e}
  std::size_t class_count = 0;

  bool operator==(const GroupFingerprint&) const = default;
  auto operator<=>(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const CayleyGroup& g);

inline constexpr std::size_t kFullIsomorphismLimit = 48;

// Exact isomorphism test up to order 48; above that, fingerprint equality.
bool are_isomorphic(const CayleyGroup& g, const CayleyGroup& h);

}  // namespace clm::group
