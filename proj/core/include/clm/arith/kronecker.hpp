#pragma once

#include <cstdint>

namespace clm::arith {

// Kronecker symbol (a/n) with the usual extensions at n = 2, n = -1 and n = 0.
// Throws InvalidInput for (0, 0).
int kronecker(std::int64_t a, std::int64_t n);

// Legendre symbol for an odd prime p, via the Kronecker routine.
inline int legendre(std::int64_t a, std::int64_t p) { return kronecker(a, p); }

}  // namespace clm::arith
