#include "clm/analytic/euler.hpp"

#include <cmath>
#include <string>

#include "clm/arith/kronecker.hpp"
#include "clm/arith/primes.hpp"
#include "clm/error.hpp"

namespace clm::analytic {

namespace {

// sum_{p > P} p^-sigma ~ P^(1-sigma) / ((sigma - 1) log P), sigma > 1
double prime_tail(double sigma, double cutoff) {
  return std::pow(cutoff, 1.0 - sigma) / ((sigma - 1.0) * std::log(cutoff));
}

void check_common(double s, std::uint64_t prime_cutoff) {
  if (!(s > 0.5)) throw InvalidInput("Euler product: s must exceed 1/2");
  if (prime_cutoff < 100) throw InvalidInput("Euler product: prime cutoff must be at least 100");
  if (prime_cutoff > kMaxPrimeCutoff) throw CapExceeded("Euler product: prime cutoff above 10^8");
}

// |log tail| <= |a| |sum chi(p) p^-s| + a^2 sum p^-2s (|a| p^-s < 1/2 past the cutoff)
double tail_estimate(int a, bool linear_term, double s, double cutoff) {
  double t = static_cast<double>(a) * a * prime_tail(2 * s, cutoff);
  if (linear_term) t += std::abs(a) * prime_tail(s, cutoff);
  return std::expm1(t);
}

}  // namespace

EulerProduct truncated_euler_product(int a, const RealCharacter& chi, double s, std::uint64_t prime_cutoff) {
  if (a == 0) throw InvalidInput("Euler product: a must be nonzero");
  check_common(s, prime_cutoff);
  if (chi.is_trivial() && !(s > 1.0))
    throw InvalidInput("Euler product: trivial character needs s > 1 (divergent region)");
  const double cut = static_cast<double>(prime_cutoff);
  if (std::abs(a) * std::pow(cut, -s) >= 0.5) throw InvalidInput("Euler product: cutoff too small for this a");
  double log_sum = 0;
  for (auto p : arith::primes_up_to(static_cast<std::uint32_t>(prime_cutoff))) {
    const int c = chi(p);
    if (c == 0) continue;
    const double f = 1.0 + a * c * std::pow(static_cast<double>(p), -s);
    if (f <= 0) {
      if (f == 0) return {0.0, 0.0, prime_cutoff};
      throw InvalidInput("Euler product: negative factor at p = " + std::to_string(p));
    }
    log_sum += std::log(f);
  }
  // A nontrivial character cancels the linear term on average; that part of
  // the estimate is heuristic.
  return {std::exp(log_sum), tail_estimate(a, chi.is_trivial(), s, cut), prime_cutoff};
}

EulerProduct m_function(std::int64_t n, Split split, const RealCharacter& chi, double s,
                        std::uint64_t prime_cutoff) {
  check_common(s, prime_cutoff);
  if (n <= 0 || n % 2 == 0 || !arith::is_squarefree(static_cast<std::uint64_t>(n)))
    throw InvalidInput("M function: n must be odd, positive and squarefree");
  if (chi.is_trivial() && !(s > 1.0)) throw InvalidInput("M function: trivial character needs s > 1");
  const int want = split == Split::plus ? 1 : -1;
  double log_sum = 0;
  for (auto p : arith::primes_up_to(static_cast<std::uint32_t>(prime_cutoff))) {
    if (arith::kronecker(p, n) != want) continue;
    const int c = chi(p);
    if (c == 0) continue;
    const double f = 1.0 + 2.0 * c * std::pow(static_cast<double>(p), -s);
    if (f <= 0) throw InvalidInput("M function: nonpositive factor at p = " + std::to_string(p));
    log_sum += std::log(f);
  }
  return {std::exp(log_sum), tail_estimate(2, chi.is_trivial(), s, static_cast<double>(prime_cutoff)), prime_cutoff};
}

}  // namespace clm::analytic
