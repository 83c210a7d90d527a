#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace clm::arith {

struct PrimePower {
  std::uint64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

// Trial-division helpers for one-off values.
bool is_prime(std::uint64_t n);
std::vector<PrimePower> factor(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
std::vector<std::uint64_t> distinct_primes(std::uint64_t n);
int omega(std::uint64_t n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Smallest-prime-factor table for bulk factoring of 1..limit.
// Memory: 4 bytes per entry (40 MB at 10^7).
class SpfTable {
 public:
  explicit SpfTable(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }
  std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }

  // Writes the distinct prime factors of n into out (ascending) and returns
  // their count, or -1 if n is not squarefree. out must hold 16 entries.
  int squarefree_primes(std::uint32_t n, std::uint32_t* out) const;
  bool is_squarefree(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace clm::arith
