#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clm::analytic {

// n -> kronecker(D, n) for a fundamental discriminant D, or the trivial
// character when D = 1.
class RealCharacter {
 public:
  explicit RealCharacter(std::int64_t discriminant);
  int operator()(std::int64_t n) const;
  std::int64_t discriminant() const noexcept { return d_; }
  std::int64_t modulus() const noexcept { return d_ < 0 ? -d_ : d_; }
  bool is_trivial() const noexcept { return d_ == 1; }
  bool is_odd() const noexcept { return d_ < 0; }

 private:
  std::int64_t d_;
};

enum class LMethod { character_sum, smoothed, class_number_formula };
std::string to_string(LMethod m);

struct LValue {
  double value = 0;
  double error_bound = 0;
  LMethod method = LMethod::character_sum;
};

inline constexpr std::int64_t kMaxLDiscriminant = 10'000'000;

// Partial sums over whole periods plus the mean of the tail, with the
// remaining error bounded by two rounds of Abel summation. Extends the sum
// until the bound is below `precision`; throws ConvergenceFailure (carrying
// the best value) if that needs more than max_terms terms.
LValue l_value_at_1(std::int64_t d, double precision = 1e-10, std::uint64_t max_terms = 4'000'000'000ULL);

// Exact rapidly convergent expansion (erfc / exponential-integral weights),
// valid for primitive characters, i.e. fundamental d.
LValue l_value_smoothed(std::int64_t d);

// Table-driven form of l_value_smoothed for bulk use (|d| <= max_abs_d).
// The weights are interpolated in log(n^2/|d|); agreement with the direct
// evaluation is about 1e-12.
class SmoothedLEvaluator {
 public:
  explicit SmoothedLEvaluator(std::int64_t max_abs_d);
  double operator()(std::int64_t d) const;

 private:
  double weight(bool odd, double u) const;
  std::int64_t max_abs_d_;
  std::vector<std::uint32_t> spf_;
  std::vector<double> log_n_;
  double u_min_ = 0;
  double u_step_ = 0;
  std::vector<double> g_odd_;
  std::vector<double> g_even_;
};

// sum over positive fundamental d < n of L(1, chi_d) / d, at each checkpoint
// (ascending) in a single pass.
std::vector<std::pair<std::int64_t, double>> gh_probe_series(std::span<const std::int64_t> checkpoints);
double gh_divergence_probe(std::int64_t n);

}  // namespace clm::analytic
