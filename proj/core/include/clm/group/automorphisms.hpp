#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clm/group/cayley_group.hpp"

namespace clm::group {

class Automorphism {
 public:
  // Verifies bijectivity and that the map preserves the table (O(|G|^2)).
  static Automorphism checked(const CayleyGroup& g, std::vector<Element> image);
  // For maps already known to be automorphisms (search output, compositions).
  static Automorphism trusted(const CayleyGroup& g, std::vector<Element> image);

  std::span<const Element> image() const noexcept { return image_; }
  Element operator()(Element x) const { return image_[x]; }
  bool is_involution() const noexcept { return involution_; }
  bool is_identity() const noexcept;
  // {g : sigma(g) = g^-1}, ascending.
  const std::vector<Element>& inverted_set() const noexcept { return inverted_; }

  bool operator==(const Automorphism& o) const { return image_ == o.image_; }
  auto operator<=>(const Automorphism& o) const { return image_ <=> o.image_; }

 private:
  Automorphism(const CayleyGroup& g, std::vector<Element> image);
  std::vector<Element> image_;
  std::vector<Element> inverted_;
  bool involution_ = false;
};

// (a o b)(x) = a(b(x))
std::vector<Element> compose_maps(std::span<const Element> a, std::span<const Element> b);
std::vector<Element> inverse_map(std::span<const Element> a);
// x -> g x g^-1
std::vector<Element> conjugation_map(const CayleyGroup& g, Element by);

struct SearchLimits {
  std::size_t max_group_order = 200;        // brute-force cap on |G|
  std::uint64_t max_enumerated = 200'000;   // cap on listing Aut(G) element by element
  std::uint64_t max_out_class_cosets = 2'000'000;
};

// Aut(G) as a base and strong generating set. The base is a generating tuple
// of G (so an automorphism is fixed by the images of the base), found by a
// backtrack search over generator images with matching element invariants.
struct AutomorphismGroup {
  std::vector<Element> base;
  std::vector<std::vector<Element>> strong_generators;  // image arrays
  std::vector<std::vector<Element>> basic_orbits;       // orbit of base[i] under generators fixing base[0..i-1]
  std::uint64_t order = 1;
};

AutomorphismGroup automorphism_group(const CayleyGroup& g, const SearchLimits& limits = {});

// Every automorphism, listed in ascending image order (so the identity first).
std::vector<std::vector<Element>> enumerate_automorphisms(const CayleyGroup& g, const AutomorphismGroup& aut,
                                                          const SearchLimits& limits = {});

struct OutClassPartition {
  std::vector<Automorphism> automorphisms;        // ascending by image
  std::vector<std::size_t> inner;                 // indices into automorphisms
  std::vector<std::vector<std::size_t>> cosets;   // Inn-cosets, each ascending; cosets ordered by least member
  std::vector<std::vector<std::size_t>> out_classes;  // indices into cosets; Out-conjugacy classes
  std::size_t center_order = 0;
};

// Full listing; requires |G| <= limits.max_group_order and
// |Aut(G)| <= limits.max_enumerated.
OutClassPartition automorphisms(const CayleyGroup& g, const SearchLimits& limits = {});

// All involutive automorphisms (sigma^2 = id, including the identity), found
// by a search that enforces sigma(sigma(x)) = x while extending. Ascending.
std::vector<Automorphism> involutive_automorphisms(const CayleyGroup& g, const SearchLimits& limits = {});

// Injective homomorphism search between groups of equal order; returns the
// image array of an isomorphism g -> h, or an empty vector.
std::vector<Element> find_isomorphism(const CayleyGroup& g, const CayleyGroup& h);

}  // namespace clm::group
