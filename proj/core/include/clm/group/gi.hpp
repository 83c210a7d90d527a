#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clm/group/automorphisms.hpp"
#include "clm/group/cayley_group.hpp"

namespace clm::group {

// sigma^2 = id and {g : sigma(g) = g^-1} generates G.
bool is_gi_automorphism(const CayleyGroup& g, const Automorphism& sigma);

bool is_generated_by_involutions(const CayleyGroup& g);

// G x| C_2 with (g1,e1)(g2,e2) = (g1 * sigma^e1(g2), e1 + e2), element
// g + e*|G|; so G sits on indices [0, |G|).
CayleyGroup build_semidirect_c2(const CayleyGroup& g, const Automorphism& sigma);

// Index-2 subgroup test straight from the definition: the involutions of
// `extension` outside `subgroup` generate `extension`.
bool is_gi_extension_direct(const CayleyGroup& extension, std::span<const Element> subgroup);

struct GIReport {
  bool has_gi = false;
  std::vector<Automorphism> gi_automorphism_reps;  // one per Out-class, lex-least image
  std::size_t gi_extension_count = 0;
  bool generated_by_involutions = false;
  std::uint64_t aut_order = 0;
  std::uint64_t out_order = 0;
  // Number of isomorphism fingerprints among the semidirect products of the reps.
  std::size_t distinct_extension_fingerprints = 0;
};

// Counts Out(G)-conjugacy classes of Inn-cosets containing a GI-automorphism.
// Searches inverted generating tuples up to the action of Aut(G), so it does
// not list Aut(G).
GIReport gi_extension_count(const CayleyGroup& g, const SearchLimits& limits = {});

// Same count read off a full listing; small groups only.
std::size_t gi_extension_count_enumerated(const CayleyGroup& g, const OutClassPartition& partition);

}  // namespace clm::group
