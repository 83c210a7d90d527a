#pragma once

#include <cstdint>
#include <vector>

#include "clm/disc/factorization.hpp"

namespace clm::disc {

struct Q8CountResult {
  FundamentalDiscriminant discriminant;
  std::int64_t count = 0;
  std::vector<DiscFactorization3> admissible_factorizations;
  int omega_total = 0;
};

// Counts via the Legendre conditions and the per-part multiplicity
// prod 2^(omega(d_i)-1), summed over ordered factorizations and divided by the
// symmetry factor. Even d requires opts.allow_even; the 2-part then loses one
// power of two and a non-integral result throws InvariantViolation.
Q8CountResult q8_count(FundamentalDiscriminant d, EvenOptions opts = {});

// Same number through the indicator product and 2^(omega(d)-3). Odd d only.
std::int64_t q8_count_indicator_form(FundamentalDiscriminant d);

// D4 count: only d1, d2 constrained, ((d1/p) = 1 for p | d2 and vice versa),
// summed over ordered factorizations with multiplicity prod 2^(omega(d_i)-1) and
// halved (the d1 <-> d2 swap). Odd d only.
std::int64_t d4_count(FundamentalDiscriminant d);

// Exact non-negative rational with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};
Rational make_rational(std::int64_t num, std::int64_t den);

// Sum over squarefree m > 1, m = 1 mod 4, gcd(m, d1 d2) = 1 and |d1 d2 m| <= x of
// (1/(8 delta)) prod_{p | d1d2} (1+(d1 m/p))(1+(d2 m/p)) prod_{q | m} (1+(d1d2/q)).
// d1, d2: coprime odd fundamental discriminants, at most one negative; sign must
// match sign(d1 d2).
Rational restricted_sum(std::int64_t d1, std::int64_t d2, Sign sign, std::int64_t x);

// #{fundamental D : |D| <= x, D = a d, a fundamental and coprime to d}.
std::int64_t count_compositum_twists(std::int64_t d, std::int64_t x);

// Density constants for the count above: the 27/(4|d| pi^2) form (odd d) or
// 3/(|d'| pi^2) with d = 4d' or 8d' (even d), and the exact Euler-product
// density (6/pi^2)/|d| prod_{p|d} p/(p+1) (with 2/3 for the odd-a restriction
// when d is even).
double twist_density_claimed(std::int64_t d);
double twist_density_exact(std::int64_t d);

}  // namespace clm::disc
