#include "clm/analytic/residues.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "clm/analytic/lvalues.hpp"
#include "clm/arith/kronecker.hpp"
#include "clm/arith/primes.hpp"
#include "clm/disc/counts.hpp"
#include "clm/disc/factorization.hpp"
#include "clm/error.hpp"

namespace clm::analytic {

namespace {

void validate_parts(std::int64_t d1, std::int64_t d2, disc::Sign sign, const char* who) {
  const std::string w = who;
  for (auto d : {d1, d2})
    if (d % 2 == 0 || !disc::is_fundamental(d))
      throw InvalidInput(w + ": parts must be odd fundamental discriminants");
  if (d1 < 0 && d2 < 0) throw InvalidInput(w + ": at most one negative part");
  if (std::gcd(d1, d2) != 1) throw InvalidInput(w + ": parts must be coprime");
  if ((d1 * d2 < 0) != (sign == disc::Sign::negative))
    throw InvalidInput(w + ": sign does not match the sign of d1*d2");
}

std::vector<std::int64_t> positive_divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto p : arith::factor(static_cast<std::uint64_t>(std::llabs(n)))) {
    const auto size = out.size();
    std::int64_t pk = 1;
    for (int e = 0; e < p.exponent; ++e) {
      pk *= static_cast<std::int64_t>(p.prime);
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

ResiduePrediction residue_q8(std::int64_t d1, std::int64_t d2, disc::Sign sign, std::uint64_t prime_cutoff) {
  validate_parts(d1, d2, sign, "residue_q8");
  if (prime_cutoff < 100 || prime_cutoff > 100'000'000)
    throw InvalidInput("residue_q8: prime cutoff must lie in [100, 10^8]");
  const std::int64_t d = d1 * d2;
  const auto n = static_cast<std::uint64_t>(std::llabs(d));
  const LValue l = l_value_at_1(d, 1e-12);
  const int delta = disc::symmetry_factor(sign);

  double log_e = 0;
  double log_printed = 0;  // of the product under the square root
  for (auto p32 : arith::primes_up_to(static_cast<std::uint32_t>(prime_cutoff))) {
    const double p = p32;
    const int c = arith::kronecker(d, p32);
    if (p32 == 2) {
      log_e += std::log(0.5 * (1.0 - c / 2.0));
      continue;
    }
    const double base = std::log1p(2.0 / p) + 2.0 * std::log1p(-1.0 / p);
    if (c == 0) {
      log_e += std::log1p(-1.0 / p);
      log_printed += base;
    } else if (c == 1) {
      log_e += base;
      log_printed += base + std::log1p(2.0 / p) + 2.0 * std::log1p(-1.0 / p);
    } else {
      log_e += std::log1p(-1.0 / (p * p));
      log_printed += base + std::log1p(-2.0 / p) + 2.0 * std::log1p(1.0 / p) - std::log1p(-4.0 / (p * p));
    }
  }
  // Factors past the cutoff are 1 + O(p^-2): |log E_p| <= 4/p^2 here and
  // <= 8/p^2 for the printed product.
  const double cut = static_cast<double>(prime_cutoff);
  const double rel_tail = std::expm1(4.0 / cut);

  double q_prod = 1;
  for (auto q : arith::distinct_primes(n)) q_prod /= 1.0 + 2.0 / static_cast<double>(q);
  const int parity = static_cast<int>((((d1 - 1) / 2) * ((d2 - 1) / 2)) & 1);
  const double bracket = std::sqrt(q_prod) + (parity ? -1.0 : 1.0);

  ResiduePrediction r;
  r.d1 = d1;
  r.d2 = d2;
  r.sign = sign;
  r.delta = delta;
  r.prime_cutoff = prime_cutoff;
  r.l_value = l.value;
  r.euler_factor = std::exp(log_e);
  r.bracket = bracket;
  const double pre = 1.0 / (8.0 * delta * static_cast<double>(n));
  r.value = pre * l.value * r.euler_factor;
  r.printed_value = pre * l.value * bracket * std::exp(0.5 * log_printed);
  r.truncation_estimate = r.value * rel_tail + pre * r.euler_factor * l.error_bound;
  if (!(r.value > 0)) throw InvariantViolation("residue_q8: nonpositive residue");
  return r;
}

double q8_lower_bound_constant(disc::Sign sign, std::uint64_t prime_cutoff) {
  if (prime_cutoff < 100) throw InvalidInput("lower bound constant: prime cutoff must be at least 100");
  double log_p = 0;
  for (auto p32 : arith::primes_up_to(static_cast<std::uint32_t>(prime_cutoff))) {
    const double p = p32;
    log_p += std::log1p(2.0 / p) + 2.0 * std::log1p(-1.0 / p) + std::log1p(-1.0 / (p * p) - 2.0 / (p * p * p));
  }
  return 1.0 / (8.0 * disc::symmetry_factor(sign)) * 0.5 * std::exp(0.5 * log_p);
}

TauberianCheck tauberian_check(std::int64_t d1, std::int64_t d2, disc::Sign sign, std::int64_t x,
                               std::uint64_t prime_cutoff) {
  if (x < 100'000) throw InvalidInput("tauberian_check: X must be at least 10^5");
  const auto pred = residue_q8(d1, d2, sign, prime_cutoff);
  TauberianCheck t;
  t.empirical = disc::restricted_sum(d1, d2, sign, x).to_double() / static_cast<double>(x);
  t.predicted = pred.value;
  t.ratio = t.empirical / t.predicted;
  return t;
}

int d4_character_sum(std::int64_t d1, std::int64_t d2) {
  int s = 0;
  for (auto a : positive_divisors(d1))
    for (auto b : positive_divisors(d2)) s += arith::kronecker(d1, b) * arith::kronecker(d2, a);
  return s;
}

double residue_d4(std::int64_t d1, std::int64_t d2, disc::Sign sign) {
  validate_parts(d1, d2, sign, "residue_d4");
  const double n = static_cast<double>(std::llabs(d1 * d2));
  return d4_character_sum(d1, d2) / (8.0 * disc::symmetry_factor(sign) * n) * (6.0 / (std::numbers::pi * std::numbers::pi));
}

}  // namespace clm::analytic
