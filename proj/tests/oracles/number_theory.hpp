#pragma once
// Definitional reference implementations used only by tests. Slow on purpose:
// every routine here avoids the library's own algorithms.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  n = iabs(n);
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool squarefree(std::int64_t n) {
  n = iabs(n);
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __extension__ typedef __int128 wide;
  wide r = 1, x = ((b % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

// Euler's criterion for an odd prime.
inline int legendre_euler(std::int64_t a, std::int64_t p) {
  const std::int64_t r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// Kronecker symbol through the factorization of n.
inline int kronecker_by_factoring(std::int64_t a, std::int64_t n) {
  if (n == 0) return iabs(a) == 1 ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  for (std::int64_t p = 3; p * p <= n; p += 2) {
    while (n % p == 0) {
      n /= p;
      result *= legendre_euler(a, p);
    }
  }
  if (n > 1) result *= legendre_euler(a, n);
  return result;
}

inline bool fundamental_by_definition(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) return squarefree(d);
  if (r == 0) {
    const std::int64_t m = d / 4;
    const std::int64_t rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
  }
  return false;
}

// All sign-consistent products of prime discriminants equal to d; callers
// expect exactly one.
inline std::vector<std::vector<std::int64_t>> prime_discriminant_decompositions(std::int64_t d) {
  std::vector<std::vector<std::int64_t>> choices;
  for (std::int64_t p : prime_factors(d)) {
    std::vector<std::int64_t> c;
    const std::vector<std::int64_t> cand = p == 2 ? std::vector<std::int64_t>{-8, -4, 4, 8}
                                                  : std::vector<std::int64_t>{-p, p};
    for (std::int64_t q : cand) {
      if (fundamental_by_definition(q)) c.push_back(q);
    }
    choices.push_back(c);
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::size_t i, std::int64_t prod) -> void {
    if (i == choices.size()) {
      if (prod == d) out.push_back(cur);
      return;
    }
    for (std::int64_t q : choices[i]) {
      cur.push_back(q);
      self(self, i + 1, prod * q);
      cur.pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

inline std::vector<std::int64_t> signed_divisors(std::int64_t d) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= iabs(d); ++k) {
    if (d % k == 0) {
      out.push_back(k);
      out.push_back(-k);
    }
  }
  return out;
}

// Unordered 3-factorizations by brute force over divisor triples, each sorted
// as (negative first, then by magnitude).
inline std::set<std::array<std::int64_t, 3>> three_factorizations(std::int64_t d) {
  std::set<std::array<std::int64_t, 3>> out;
  const auto divs = signed_divisors(d);
  for (std::int64_t a : divs) {
    for (std::int64_t b : divs) {
      if (a == 1 || b == 1 || (d % (a * b)) != 0) continue;
      const std::int64_t c = d / (a * b);
      if (c == 1) continue;
      if (!fundamental_by_definition(a) || !fundamental_by_definition(b) || !fundamental_by_definition(c)) continue;
      if (std::gcd(iabs(a), iabs(b)) != 1 || std::gcd(iabs(a), iabs(c)) != 1 || std::gcd(iabs(b), iabs(c)) != 1) continue;
      if ((a < 0) + (b < 0) + (c < 0) > 1) continue;
      std::array<std::int64_t, 3> t{a, b, c};
      std::sort(t.begin(), t.end(), [](std::int64_t x, std::int64_t y) {
        if ((x < 0) != (y < 0)) return x < 0;
        return iabs(x) < iabs(y);
      });
      out.insert(t);
    }
  }
  return out;
}

inline bool q8_conditions(const std::array<std::int64_t, 3>& t) {
  for (int i = 0; i < 3; ++i) {
    const std::int64_t others = t[(i + 1) % 3] * t[(i + 2) % 3];
    for (std::int64_t p : prime_factors(t[i])) {
      if (kronecker_by_factoring(others, p) != 1) return false;
    }
  }
  return true;
}

inline bool mutual_conditions(std::int64_t a, std::int64_t b) {
  for (std::int64_t p : prime_factors(b)) {
    if (kronecker_by_factoring(a, p) != 1) return false;
  }
  for (std::int64_t p : prime_factors(a)) {
    if (kronecker_by_factoring(b, p) != 1) return false;
  }
  return true;
}

// Ordered-triple sums divided by the symmetry factor, odd d.
inline std::int64_t q8_count(std::int64_t d) {
  std::int64_t ordered = 0;
  const auto divs = signed_divisors(d);
  for (const auto& t : three_factorizations(d)) {
    std::array<std::int64_t, 3> v = t;
    std::sort(v.begin(), v.end());
    do {
      if (d < 0 && v[0] > 0) continue;  // negative part pinned first
      if (!q8_conditions(v)) continue;
      std::int64_t mult = 1;
      for (std::int64_t x : v) mult <<= (prime_factors(x).size() - 1);
      ordered += mult;
    } while (std::next_permutation(v.begin(), v.end()));
  }
  const std::int64_t delta = d < 0 ? 2 : 6;
  return ordered % delta == 0 ? ordered / delta : -1;
}

inline std::int64_t d4_count(std::int64_t d) {
  std::int64_t ordered = 0;
  for (const auto& t : three_factorizations(d)) {
    std::array<std::int64_t, 3> v = t;
    std::sort(v.begin(), v.end());
    do {
      if (!mutual_conditions(v[0], v[1])) continue;
      std::int64_t mult = 1;
      for (std::int64_t x : v) mult <<= (prime_factors(x).size() - 1);
      ordered += mult;
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return ordered % 2 == 0 ? ordered / 2 : -1;
}

}  // namespace oracle
