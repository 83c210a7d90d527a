#include "clm/disc/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "clm/arith/kronecker.hpp"
#include "clm/arith/primes.hpp"
#include "clm/error.hpp"
#include "partitions.hpp"

namespace clm::disc {
namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::array<FundamentalDiscriminant, 3> canonical_parts(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  std::array<std::int64_t, 3> v{d1, d2, d3};
  std::sort(v.begin(), v.end(), [](std::int64_t a, std::int64_t b) {
    if ((a < 0) != (b < 0)) return a < 0;
    return abs64(a) < abs64(b);
  });
  return {FundamentalDiscriminant(v[0]), FundamentalDiscriminant(v[1]), FundamentalDiscriminant(v[2])};
}

}  // namespace

DiscFactorization3::DiscFactorization3(std::int64_t d1, std::int64_t d2, std::int64_t d3)
    : parts_(canonical_parts(d1, d2, d3)), product_(d1 * d2 * d3) {
  int negatives = 0;
  for (const auto& p : parts_) negatives += p.value() < 0 ? 1 : 0;
  if (negatives > 1) throw InvalidInput("factorization has more than one negative part");
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::gcd(abs64(part(i)), abs64(part(j))) != 1) {
        throw InvalidInput("factorization parts " + std::to_string(part(i)) + " and " +
                           std::to_string(part(j)) + " are not coprime");
      }
    }
  }
}

std::vector<std::array<std::int64_t, 3>> DiscFactorization3::ordered_variants() const {
  std::array<std::int64_t, 3> v{part(0), part(1), part(2)};
  std::vector<std::array<std::int64_t, 3>> out;
  if (v[0] < 0) {
    out.push_back(v);
    out.push_back({v[0], v[2], v[1]});
    return out;
  }
  std::sort(v.begin(), v.end());
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<DiscFactorization3> enumerate_3factorizations(FundamentalDiscriminant d) {
  const auto q = prime_discriminant_factorization(d);
  std::vector<DiscFactorization3> out;
  const int n = static_cast<int>(q.size());
  if (n < 3) return out;
  for (const auto& blocks : detail::three_block_partitions(n)) {
    std::array<std::int64_t, 3> parts{1, 1, 1};
    int negatives = 0;
    for (int b = 0; b < 3; ++b) {
      for (int i = 0; i < n; ++i) {
        if (blocks[static_cast<std::size_t>(b)] & (1u << i)) parts[static_cast<std::size_t>(b)] *= q[static_cast<std::size_t>(i)];
      }
      negatives += parts[static_cast<std::size_t>(b)] < 0 ? 1 : 0;
    }
    if (negatives > 1) continue;
    out.emplace_back(parts[0], parts[1], parts[2]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_q8_factorization(const DiscFactorization3& f) {
  for (int i = 0; i < 3; ++i) {
    const std::int64_t others = f.product() / f.part(i);
    for (std::uint64_t p : arith::distinct_primes(static_cast<std::uint64_t>(abs64(f.part(i))))) {
      if (arith::kronecker(others, static_cast<std::int64_t>(p)) != 1) return false;
    }
  }
  return true;
}

int q8_indicator(const DiscFactorization3& f, EvenOptions opts) {
  const std::int64_t d = f.product();
  if ((d & 1) == 0 && !opts.allow_even) {
    throw InvalidInput("q8_indicator: even discriminant " + std::to_string(d) + " needs the even-case flag");
  }
  const std::int64_t d12 = f.part(0) * f.part(1);
  const std::int64_t d13 = f.part(0) * f.part(2);
  const std::int64_t d23 = f.part(1) * f.part(2);
  std::int64_t product = 1;
  int omega = 0;
  for (std::uint64_t pu : arith::distinct_primes(static_cast<std::uint64_t>(abs64(d)))) {
    const auto p = static_cast<std::int64_t>(pu);
    product *= (1 + arith::kronecker(d12, p)) * (1 + arith::kronecker(d13, p)) * (1 + arith::kronecker(d23, p));
    ++omega;
  }
  // p divides exactly one part, so two of the symbols vanish and each prime
  // contributes 0 or 2.
  const std::int64_t scale = std::int64_t{1} << omega;
  if (product % scale != 0) throw InvariantViolation("indicator product not divisible by 2^omega");
  const std::int64_t value = product / scale;
  if (value != 0 && value != 1) {
    throw InvariantViolation("indicator evaluated to " + std::to_string(value));
  }
  return static_cast<int>(value);
}

int symmetry_factor(Sign s) { return s == Sign::negative ? 2 : 6; }

}  // namespace clm::disc
