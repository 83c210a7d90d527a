#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace clm::disc {

enum class Sign { negative, positive };

std::string_view to_string(Sign s);
Sign parse_sign(std::string_view text);  // accepts neg/-/negative, pos/+/positive

// Discriminant of a quadratic field. Construction validates.
class FundamentalDiscriminant {
 public:
  explicit FundamentalDiscriminant(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t magnitude() const noexcept { return value_ < 0 ? -value_ : value_; }
  Sign sign() const noexcept { return value_ < 0 ? Sign::negative : Sign::positive; }
  bool is_odd() const noexcept { return (value_ & 1) != 0; }

  auto operator<=>(const FundamentalDiscriminant&) const = default;

 private:
  std::int64_t value_;
};

bool is_fundamental(std::int64_t d);

// Ascending by |D|. Uses a sieve, so X up to ~10^8 is practical.
std::vector<FundamentalDiscriminant> enumerate_fundamental(std::int64_t x, Sign sign);
void for_each_fundamental(std::int64_t x, Sign sign,
                          const std::function<void(FundamentalDiscriminant)>& fn);

// Prime discriminants (+-p with p odd and sign fixed by p mod 4; -4, 8 or -8),
// ordered by the underlying rational prime.
std::vector<std::int64_t> prime_discriminant_factorization(FundamentalDiscriminant d);

// Prime discriminant attached to an odd prime: p if p = 1 mod 4, else -p.
inline std::int64_t odd_prime_discriminant(std::int64_t p) { return (p % 4 == 1) ? p : -p; }

}  // namespace clm::disc
