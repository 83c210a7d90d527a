#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "clm/disc/fundamental.hpp"

namespace clm::disc {

// d = d1 d2 d3 with pairwise coprime fundamental parts, none equal to 1 and
// at most one negative. Parts are stored in canonical order: the negative part
// (if any) first, then by increasing magnitude.
class DiscFactorization3 {
 public:
  DiscFactorization3(std::int64_t d1, std::int64_t d2, std::int64_t d3);

  const std::array<FundamentalDiscriminant, 3>& parts() const noexcept { return parts_; }
  std::int64_t part(int i) const { return parts_.at(static_cast<std::size_t>(i)).value(); }
  std::int64_t product() const noexcept { return product_; }

  // Orderings counted by the ordered sums: 2 when one part is negative (it is
  // pinned in front), 6 otherwise.
  std::vector<std::array<std::int64_t, 3>> ordered_variants() const;

  auto operator<=>(const DiscFactorization3&) const = default;

 private:
  std::array<FundamentalDiscriminant, 3> parts_;
  std::int64_t product_;
};

std::vector<DiscFactorization3> enumerate_3factorizations(FundamentalDiscriminant d);

// (d_j d_k / p) = 1 for every prime p dividing d_i.
bool is_q8_factorization(const DiscFactorization3& f);

struct EvenOptions {
  bool allow_even = false;
};

// 2^-omega(d) prod_{p|d} (1 + (d1d2/p))(1 + (d1d3/p))(1 + (d2d3/p)), exact.
// Throws InvalidInput for even d unless allowed.
int q8_indicator(const DiscFactorization3& f, EvenOptions opts = {});

// Number of ordered factorizations per unordered one divided into the count.
int symmetry_factor(Sign s);

}  // namespace clm::disc
