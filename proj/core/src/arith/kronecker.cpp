#include "clm/arith/kronecker.hpp"

#include "clm/error.hpp"

namespace clm::arith {
namespace {

// (2/n) for odd n, indexed by n mod 8.
constexpr int kTwo[8] = {0, 1, 0, -1, 0, -1, 0, 1};

}  // namespace

int kronecker(std::int64_t a, std::int64_t b) {
  if (b == 0) {
    if (a == 0) throw InvalidInput("kronecker(0, 0) is undefined");
    return (a == 1 || a == -1) ? 1 : 0;
  }
  if ((a & 1) == 0 && (b & 1) == 0) return 0;

  int v = 0;
  while ((b & 1) == 0) {
    b >>= 1;
    ++v;
  }
  int k = (v & 1) ? kTwo[a & 7] : 1;
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  // b is odd and positive from here on; a may still be negative.
  while (true) {
    if (a == 0) return b == 1 ? k : 0;
    v = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++v;
    }
    if (v & 1) k *= kTwo[b & 7];
    if (a & b & 2) k = -k;
    const std::int64_t r = a < 0 ? -a : a;
    a = b % r;
    b = r;
  }
}

}  // namespace clm::arith
