#include "clm/arith/primes.hpp"

#include "clm/error.hpp"

namespace clm::arith {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factor(std::uint64_t n) {
  if (n == 0) throw InvalidInput("factor(0)");
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_squarefree(std::uint64_t n) {
  for (const auto& pp : factor(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factor(n)) out.push_back(pp.prime);
  return out;
}

int omega(std::uint64_t n) { return static_cast<int>(factor(n).size()); }

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

SpfTable::SpfTable(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
  if (limit >= 1) spf_[1] = 1;
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes.push_back(i);
    }
    // Linear sieve: each composite is written once, by its smallest prime.
    for (std::uint32_t p : primes) {
      const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
      if (p > spf_[i] || m > limit) break;
      spf_[m] = p;
    }
  }
}

int SpfTable::squarefree_primes(std::uint32_t n, std::uint32_t* out) const {
  if (n == 0 || n > limit_) throw InvalidInput("SpfTable: value out of range");
  int count = 0;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    n /= p;
    if (n % p == 0) return -1;
    out[count++] = p;
  }
  return count;
}

bool SpfTable::is_squarefree(std::uint32_t n) const {
  std::uint32_t buf[16];
  return squarefree_primes(n, buf) >= 0;
}

}  // namespace clm::arith
