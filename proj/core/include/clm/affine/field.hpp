#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clm::affine {

inline constexpr std::uint64_t kMaxFieldSize = 1'000'000;

// F_p[x]/(modulus). modulus is monic of degree n, coefficients low to high.
struct FiniteFieldSpec {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<std::uint64_t> modulus;

  std::uint64_t q() const;
  bool operator==(const FiniteFieldSpec&) const = default;
};

std::string to_string(const FiniteFieldSpec& spec);  // e.g. "x^2+x+1 over F_2"

// Ben-Or test: no common factor with x^(p^k) - x for k <= n/2.
bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& monic);

// First monic irreducible of degree n in code order, where the code of
// x^n + c_{n-1}x^{n-1} + ... + c_0 is sum c_i p^i. Degree 1 gives x.
FiniteFieldSpec find_irreducible(std::uint64_t p, unsigned n);

// Elements are codes in [0, q): the base-p digits are the coordinates in the
// basis 1, x, ..., x^(n-1).
using FieldElement = std::uint64_t;

class FiniteField {
 public:
  explicit FiniteField(FiniteFieldSpec spec);

  const FiniteFieldSpec& spec() const noexcept { return spec_; }
  std::uint64_t p() const noexcept { return spec_.p; }
  unsigned n() const noexcept { return spec_.n; }
  std::uint64_t q() const noexcept { return q_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  std::uint64_t multiplicative_order(FieldElement a) const;
  std::vector<std::uint64_t> coordinates(FieldElement a) const;
  FieldElement from_coordinates(const std::vector<std::uint64_t>& c) const;
  // Least code generating the unit group.
  FieldElement primitive_element() const;

 private:
  FiniteFieldSpec spec_;
  std::uint64_t q_;
  std::vector<std::uint64_t> unit_order_primes_;
};

// Element of exact multiplicative order d: primitive element raised to (q-1)/d.
FieldElement element_of_order(const FiniteField& field, std::uint64_t d);

}  // namespace clm::affine
