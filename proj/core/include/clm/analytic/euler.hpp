#pragma once

#include <cstdint>

#include "clm/analytic/lvalues.hpp"

namespace clm::analytic {

struct EulerProduct {
  double value = 1;
  // Relative size of the omitted factors, exp(|log tail|) - 1, from the
  // log expansion of the primes past the cutoff.
  double tail_estimate = 0;
  std::uint64_t prime_cutoff = 0;
};

inline constexpr std::uint64_t kMaxPrimeCutoff = 100'000'000;

// prod_{p <= cutoff} (1 + a chi(p) p^-s). Requires a != 0, s > 1/2 and
// cutoff >= 100; a trivial character needs s > 1 (the product diverges or
// tends to 0 otherwise), which is reported as InvalidInput.
EulerProduct truncated_euler_product(int a, const RealCharacter& chi, double s, std::uint64_t prime_cutoff);

enum class Split { plus, minus };

// prod over primes q <= cutoff with Jacobi symbol (q/n) = +1 (Split::plus) or
// -1 (Split::minus) of (1 + 2 chi(q) q^-s); n odd and squarefree.
EulerProduct m_function(std::int64_t n, Split split, const RealCharacter& chi, double s,
                        std::uint64_t prime_cutoff);

}  // namespace clm::analytic
