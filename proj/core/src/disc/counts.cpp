#include "clm/disc/counts.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "clm/arith/kronecker.hpp"
#include "clm/arith/primes.hpp"
#include "clm/error.hpp"

namespace clm::disc {
namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

int part_omega(std::int64_t part) { return arith::omega(static_cast<std::uint64_t>(abs64(part))); }

// 2-adic bookkeeping for the even case: parts = 4 mod 8 lose one power of two.
int multiplicity_exponent(std::int64_t part, bool even_rule) {
  int e = part_omega(part) - 1;
  if (even_rule && ((part % 8) + 8) % 8 == 4) e -= 1;
  return e;
}

// d1 and d2 each have every prime of the other as a square class: (d1/p) = 1 for p | d2
// and (d2/p) = 1 for p | d1.
bool mutual_residues(std::int64_t d1, std::int64_t d2) {
  for (std::uint64_t p : arith::distinct_primes(static_cast<std::uint64_t>(abs64(d2)))) {
    if (arith::kronecker(d1, static_cast<std::int64_t>(p)) != 1) return false;
  }
  for (std::uint64_t p : arith::distinct_primes(static_cast<std::uint64_t>(abs64(d1)))) {
    if (arith::kronecker(d2, static_cast<std::int64_t>(p)) != 1) return false;
  }
  return true;
}

}  // namespace

Q8CountResult q8_count(FundamentalDiscriminant d, EvenOptions opts) {
  const bool even = !d.is_odd();
  if (even && !opts.allow_even) {
    throw InvalidInput("q8_count: even discriminant " + std::to_string(d.value()) + " needs the even-case flag");
  }
  Q8CountResult result{d, 0, {}, arith::omega(static_cast<std::uint64_t>(d.magnitude()))};
  // Accumulate in units of 1/2 so that the even rule's 2^-1 stays exact.
  std::int64_t halves = 0;
  for (const auto& f : enumerate_3factorizations(d)) {
    if (!is_q8_factorization(f)) continue;
    result.admissible_factorizations.push_back(f);
    for (const auto& v : f.ordered_variants()) {
      int e = 1;
      for (std::int64_t part : v) e += multiplicity_exponent(part, even);
      if (e < 0) throw InvariantViolation("negative multiplicity exponent");
      halves += std::int64_t{1} << e;
    }
  }
  const std::int64_t denom = 2 * symmetry_factor(d.sign());
  if (halves % denom != 0) {
    throw InvariantViolation("q8_count(" + std::to_string(d.value()) + ") is not integral: " +
                             std::to_string(halves) + "/" + std::to_string(denom));
  }
  result.count = halves / denom;
  return result;
}

std::int64_t q8_count_indicator_form(FundamentalDiscriminant d) {
  if (!d.is_odd()) throw InvalidInput("q8_count_indicator_form: odd discriminants only");
  const int w = arith::omega(static_cast<std::uint64_t>(d.magnitude()));
  std::int64_t ordered_sum = 0;
  for (const auto& f : enumerate_3factorizations(d)) {
    const int ind = q8_indicator(f);
    ordered_sum += static_cast<std::int64_t>(f.ordered_variants().size()) * ind * (std::int64_t{1} << (w - 3));
  }
  const int delta = symmetry_factor(d.sign());
  if (ordered_sum % delta != 0) throw InvariantViolation("indicator-form count is not integral");
  return ordered_sum / delta;
}

std::int64_t d4_count(FundamentalDiscriminant d) {
  if (!d.is_odd()) throw InvalidInput("d4_count: odd discriminants only");
  std::int64_t ordered_sum = 0;
  for (const auto& f : enumerate_3factorizations(d)) {
    std::int64_t mult = 1;
    for (int i = 0; i < 3; ++i) mult <<= multiplicity_exponent(f.part(i), false);
    // All six orderings (d1, d2, d3); only the (d1, d2) pair is constrained.
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        if (mutual_residues(f.part(i), f.part(j))) ordered_sum += mult;
      }
    }
  }
  if (ordered_sum % 2 != 0) throw InvariantViolation("d4_count is not integral");
  return ordered_sum / 2;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(abs64(num), den);
  return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

Rational restricted_sum(std::int64_t d1, std::int64_t d2, Sign sign, std::int64_t x) {
  if (!is_fundamental(d1) || !is_fundamental(d2) || (d1 & 1) == 0 || (d2 & 1) == 0) {
    throw InvalidInput("restricted_sum: parts must be odd fundamental discriminants");
  }
  if (d1 < 0 && d2 < 0) throw InvalidInput("restricted_sum: at most one negative part");
  if (std::gcd(abs64(d1), abs64(d2)) != 1) throw InvalidInput("restricted_sum: parts must be coprime");
  if ((d1 * d2 < 0) != (sign == Sign::negative)) {
    throw InvalidInput("restricted_sum: sign does not match the sign of d1*d2");
  }
  if (x < 0) throw InvalidInput("restricted_sum: negative bound");
  const std::int64_t delta = symmetry_factor(sign);
  const std::int64_t n = abs64(d1 * d2);
  const std::int64_t m_max = x / n;
  if (m_max < 5) return Rational{0, 1};
  if (m_max > 4'000'000'000LL) throw CapExceeded("restricted_sum: range too large");

  const auto n_primes = arith::distinct_primes(static_cast<std::uint64_t>(n));
  const arith::SpfTable spf(static_cast<std::uint32_t>(m_max));
  const std::int64_t d12 = d1 * d2;
  std::int64_t total = 0;
  std::uint32_t primes[16];
  for (std::int64_t m = 5; m <= m_max; m += 4) {
    const int k = spf.squarefree_primes(static_cast<std::uint32_t>(m), primes);
    if (k < 0) continue;
    if (std::gcd(m, n) != 1) continue;
    std::int64_t term = 1;
    for (std::uint64_t pu : n_primes) {
      const auto p = static_cast<std::int64_t>(pu);
      term *= (1 + arith::kronecker(d1 * m, p)) * (1 + arith::kronecker(d2 * m, p));
      if (term == 0) break;
    }
    for (int i = 0; i < k && term != 0; ++i) term *= 1 + arith::kronecker(d12, primes[i]);
    total += term;
  }
  return make_rational(total, 8 * delta);
}

std::int64_t count_compositum_twists(std::int64_t d, std::int64_t x) {
  if (!is_fundamental(d)) throw InvalidInput("count_compositum_twists: d must be fundamental");
  const std::int64_t bound = x / abs64(d);
  if (bound < 3) return 0;
  std::int64_t count = 0;
  for (Sign s : {Sign::negative, Sign::positive}) {
    for_each_fundamental(bound, s, [&](FundamentalDiscriminant a) {
      if (std::gcd(a.magnitude(), abs64(d)) == 1) ++count;
    });
  }
  return count;
}

double twist_density_claimed(std::int64_t d) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  if (d & 1) return 27.0 / (4.0 * static_cast<double>(abs64(d)) * pi2);
  std::int64_t odd = abs64(d);
  while (odd % 2 == 0) odd /= 2;
  return 3.0 / (static_cast<double>(odd) * pi2);
}

double twist_density_exact(std::int64_t d) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  double local = 1.0;
  for (std::uint64_t p : arith::distinct_primes(static_cast<std::uint64_t>(abs64(d)))) {
    const auto pd = static_cast<double>(p);
    local *= pd / (pd + 1.0);
  }
  return 6.0 / pi2 / static_cast<double>(abs64(d)) * local;
}

}  // namespace clm::disc
