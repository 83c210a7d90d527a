#pragma once

#include <cstdint>

#include "clm/disc/fundamental.hpp"

namespace clm::analytic {

inline constexpr std::uint64_t kDefaultResidueCutoff = 1'000'000;

// Residue at s = 1 of sum_m a_{+-d, d1, d2} m^-s for the restricted Q8 series.
//
// `value` is L(1, chi_{d1 d2}) * E / (8 delta |d1 d2|) with
//   E = prod_p E_p,  E_2 = (1/2)(1 - chi(2)/2),  E_p = 1 - 1/p for p | d1 d2,
//   E_p = (1 + 2/p)(1 - 1/p)^2 if chi(p) = 1,  E_p = 1 - 1/p^2 if chi(p) = -1,
// derived directly from the series coefficients. `printed_value` is the
// closed form with the reciprocity bracket and the square-rooted product
// (odd primes only; its p = 2 factor is singular when chi(2) = -1). The two
// disagree; see README.
struct ResiduePrediction {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  disc::Sign sign = disc::Sign::negative;
  double value = 0;
  double printed_value = 0;
  std::uint64_t prime_cutoff = 0;
  double truncation_estimate = 0;  // absolute, on value
  double l_value = 0;
  double euler_factor = 0;  // E above
  double bracket = 0;       // of the printed form
  int delta = 0;
};

// d1, d2: coprime odd fundamental discriminants, at most one negative, sign
// equal to sign(d1 d2).
ResiduePrediction residue_q8(std::int64_t d1, std::int64_t d2, disc::Sign sign,
                             std::uint64_t prime_cutoff = kDefaultResidueCutoff);

// (1/(8 delta)) * (1/2) * sqrt(prod_p (1 + 2/p)(1 - 1/p)^2 (1 - p^-2 - 2p^-3)),
// the constant c in Res >= c L(1, chi_{d1 d2}) / |d1 d2|.
double q8_lower_bound_constant(disc::Sign sign, std::uint64_t prime_cutoff = kDefaultResidueCutoff);

struct TauberianCheck {
  double empirical = 0;
  double predicted = 0;
  double ratio = 0;
};

// empirical = restricted_sum(d1, d2, sign, x) / x; x >= 10^5.
TauberianCheck tauberian_check(std::int64_t d1, std::int64_t d2, disc::Sign sign, std::int64_t x,
                               std::uint64_t prime_cutoff = kDefaultResidueCutoff);

// S = sum_{a | d1} sum_{b | d2} (d1/b)(d2/a) over positive divisors.
int d4_character_sum(std::int64_t d1, std::int64_t d2);

// (1/|d1 d2|) (1/(8 delta)) S (6/pi^2).
double residue_d4(std::int64_t d1, std::int64_t d2, disc::Sign sign);

}  // namespace clm::analytic
