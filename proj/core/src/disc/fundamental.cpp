#include "clm/disc/fundamental.hpp"

#include <algorithm>
#include <string>

#include "clm/arith/primes.hpp"
#include "clm/error.hpp"

namespace clm::disc {

std::string_view to_string(Sign s) { return s == Sign::negative ? "neg" : "pos"; }

Sign parse_sign(std::string_view text) {
  if (text == "neg" || text == "-" || text == "negative" || text == "minus") return Sign::negative;
  if (text == "pos" || text == "+" || text == "positive" || text == "plus") return Sign::positive;
  throw InvalidInput("unrecognized sign '" + std::string(text) + "' (use neg or pos)");
}

bool is_fundamental(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::uint64_t mag = static_cast<std::uint64_t>(d < 0 ? -d : d);
  // d mod 4 with the sign taken into account.
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) return arith::is_squarefree(mag);
  if (r != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t rm = ((m % 4) + 4) % 4;
  if (rm != 2 && rm != 3) return false;
  return arith::is_squarefree(mag / 4);
}

FundamentalDiscriminant::FundamentalDiscriminant(std::int64_t value) : value_(value) {
  if (!is_fundamental(value)) {
    throw InvalidInput(std::to_string(value) + " is not a fundamental discriminant");
  }
}

void for_each_fundamental(std::int64_t x, Sign sign,
                          const std::function<void(FundamentalDiscriminant)>& fn) {
  if (x < 3) throw InvalidInput("enumerate_fundamental: X must be at least 3");
  if (x > 4'000'000'000LL) throw CapExceeded("enumerate_fundamental: X above 4e9");
  // Squarefree flags for 1..x via a sieve over prime squares.
  std::vector<bool> squarefree(static_cast<std::size_t>(x) + 1, true);
  for (std::int64_t p = 2; p * p <= x; ++p) {
    for (std::int64_t j = p * p; j <= x; j += p * p) squarefree[static_cast<std::size_t>(j)] = false;
  }
  const std::int64_t s = sign == Sign::negative ? -1 : 1;
  for (std::int64_t a = 3; a <= x; ++a) {
    const std::int64_t d = s * a;
    const std::int64_t r = ((d % 4) + 4) % 4;
    bool ok = false;
    if (r == 1) {
      ok = squarefree[static_cast<std::size_t>(a)];
    } else if (r == 0) {
      const std::int64_t rm = (((d / 4) % 4) + 4) % 4;
      ok = (rm == 2 || rm == 3) && squarefree[static_cast<std::size_t>(a / 4)];
    }
    if (ok) fn(FundamentalDiscriminant(d));
  }
}

std::vector<FundamentalDiscriminant> enumerate_fundamental(std::int64_t x, Sign sign) {
  std::vector<FundamentalDiscriminant> out;
  for_each_fundamental(x, sign, [&](FundamentalDiscriminant d) { out.push_back(d); });
  return out;
}

std::vector<std::int64_t> prime_discriminant_factorization(FundamentalDiscriminant d) {
  std::int64_t odd = d.magnitude();
  while (odd % 2 == 0) odd /= 2;
  std::vector<std::int64_t> out;
  std::int64_t odd_product = 1;
  for (std::uint64_t p : arith::distinct_primes(static_cast<std::uint64_t>(odd))) {
    const std::int64_t q = odd_prime_discriminant(static_cast<std::int64_t>(p));
    out.push_back(q);
    odd_product *= q;
  }
  if (!d.is_odd()) {
    const std::int64_t two_part = d.value() / odd_product;
    if (two_part != -4 && two_part != 8 && two_part != -8) {
      throw InvariantViolation("prime discriminant decomposition of " + std::to_string(d.value()) +
                               " left 2-part " + std::to_string(two_part));
    }
    out.insert(out.begin(), two_part);
  } else if (odd_product != d.value()) {
    throw InvariantViolation("odd prime discriminants do not multiply back to " +
                             std::to_string(d.value()));
  }
  return out;
}

}  // namespace clm::disc
