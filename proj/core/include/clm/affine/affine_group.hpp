#pragma once

#include <cstdint>
#include <vector>

#include "clm/affine/field.hpp"
#include "clm/group/automorphisms.hpp"
#include "clm/group/cayley_group.hpp"

namespace clm::affine {

// G(q,d): the maps v -> a v + b on F_q with a^d = 1.
struct AffineGroupSpec {
  FiniteFieldSpec field;
  std::uint64_t d = 1;
  FieldElement x_d = 1;
  group::MatrixFp x_matrix;  // multiplication by x_d on F_p^n, basis 1, x, ..., x^(n-1)
};

AffineGroupSpec make_affine_spec(std::uint64_t p, unsigned n, std::uint64_t d);

struct FrobeniusDecomposition {
  std::vector<group::Element> kernel;      // translations, sorted
  std::vector<group::Element> complement;  // <X_d>, sorted
};

struct AffineGroup {
  AffineGroupSpec spec;
  group::MatrixGroup realization;  // (n+1)x(n+1) matrices [[X^k, b], [0, 1]]
  FrobeniusDecomposition decomposition;
};

AffineGroup build_affine_group(const AffineGroupSpec& spec, std::size_t cap = group::kDefaultCayleyCap);

// Some 0 <= l < ord_d(p) has p^l = -1 mod d; d <= 2 counts as true.
bool has_gi_by_theorem(std::uint64_t p, unsigned n, std::uint64_t d);
int gi_count_by_theorem(std::uint64_t p, unsigned n, std::uint64_t d);
// Count observed by exhaustive search: as above except d = 2, where the
// classes are sign patterns of an involution on F_p^n up to overall sign,
// floor(n/2) + 1 of them.
int gi_count_refined(std::uint64_t p, unsigned n, std::uint64_t d);

// Kernel is normal with trivial intersection and complementary order, every
// automorphism fixes it setwise, and |H| divides |K| - 1.
bool frobenius_checks(const group::CayleyGroup& g, const FrobeniusDecomposition& dec,
                      const group::SearchLimits& limits = {});

// Largest number of points of F_q fixed by a non-identity element.
std::size_t max_fixed_points(const AffineGroup& g);

struct AutStructure {
  std::uint64_t aut_order = 0;         // from the automorphism search
  std::uint64_t normalizer_order = 0;  // |N_{GL_n(F_p)}(<X_d>)| by direct scan
  std::uint64_t q = 0;
  bool holds() const { return aut_order == q * normalizer_order; }
};

inline constexpr std::uint64_t kMaxGLScan = 100'000;

AutStructure aut_structure_check(const AffineGroupSpec& spec, const group::SearchLimits& limits = {});

}  // namespace clm::affine
