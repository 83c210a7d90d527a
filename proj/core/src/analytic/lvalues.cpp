#include "clm/analytic/lvalues.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "clm/arith/kronecker.hpp"
#include "clm/disc/fundamental.hpp"
#include "clm/error.hpp"

namespace clm::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
// weights are below 1e-13 past n^2/|d| = 9
constexpr double kTMax = 9.0;

void require_fundamental(std::int64_t d) {
  if (d == 1 || !disc::is_fundamental(d))
    throw InvalidInput("L-value: " + std::to_string(d) + " is not a fundamental discriminant");
  if (std::llabs(d) > kMaxLDiscriminant) throw CapExceeded("L-value: |D| exceeds 10^7");
}

double e1(double x) { return -std::expint(-x); }

// n * weight for n^2 = t |d|; L(1) = sum chi(n) g(t_n) / n.
double g_odd(double t) {
  const double r = std::sqrt(kPi * t);
  return std::exp(-kPi * t) + kPi * std::sqrt(t) * std::erfc(r);
}
double g_even(double t) { return std::erfc(std::sqrt(kPi * t)) + std::sqrt(t) * e1(kPi * t); }

}  // namespace

RealCharacter::RealCharacter(std::int64_t discriminant) : d_(discriminant) {
  if (d_ != 1 && !disc::is_fundamental(d_))
    throw InvalidInput("character: " + std::to_string(d_) + " is not 1 or a fundamental discriminant");
}

int RealCharacter::operator()(std::int64_t n) const {
  if (d_ == 1) return 1;
  return arith::kronecker(d_, n);
}

std::string to_string(LMethod m) {
  switch (m) {
    case LMethod::character_sum: return "character-sum";
    case LMethod::smoothed: return "smoothed";
    case LMethod::class_number_formula: return "class-number-formula";
  }
  return "?";
}

LValue l_value_at_1(std::int64_t d, double precision, std::uint64_t max_terms) {
  require_fundamental(d);
  if (!(precision > 0)) throw InvalidInput("L-value: precision must be positive");
  const auto q = static_cast<std::uint64_t>(std::llabs(d));
  std::vector<double> chi(q + 1, 0.0);
  for (std::uint64_t r = 1; r <= q; ++r) chi[r] = arith::kronecker(d, static_cast<std::int64_t>(r));
  // A(r) = chi(1) + ... + chi(r) vanishes at r = q; B sums A - mean(A).
  double a = 0;
  double a_mean = 0;
  std::vector<double> partial(q + 1, 0.0);
  for (std::uint64_t r = 1; r <= q; ++r) {
    a += chi[r];
    partial[r] = a;
    a_mean += a;
  }
  a_mean /= static_cast<double>(q);
  double b = 0;
  double b_max = 0;
  for (std::uint64_t r = 1; r <= q; ++r) {
    b += partial[r] - a_mean;
    b_max = std::max(b_max, std::fabs(b));
  }

  // Each period is summed on its own and folded in with Kahan compensation,
  // so rounding grows with the number of periods' logarithm, not with n.
  constexpr auto eps_ld = static_cast<double>(std::numeric_limits<long double>::epsilon());
  long double sum = 0;
  long double carry = 0;
  double rounding = 0;
  std::uint64_t n = 0;
  double bound = std::numeric_limits<double>::infinity();
  double value = 0;
  while (true) {
    long double period = 0;
    long double magnitude = 0;
    for (std::uint64_t r = 1; r <= q; ++r) {
      if (chi[r] == 0) continue;
      const long double term = chi[r] / static_cast<long double>(n + r);
      period += term;
      magnitude += term < 0 ? -term : term;
    }
    rounding += eps_ld * static_cast<double>(q) * static_cast<double>(magnitude) + 4 * eps_ld * std::fabs(static_cast<double>(sum));
    const long double y = period - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    n += q;
    const double np1 = static_cast<double>(n) + 1.0;
    value = static_cast<double>(sum + static_cast<long double>(a_mean / np1));
    bound = b_max / (np1 * (np1 + 1.0)) + rounding + std::numeric_limits<double>::epsilon() * std::fabs(value);
    if (bound <= precision) break;
    if (n + q > max_terms)
      throw ConvergenceFailure("L-value: precision " + std::to_string(precision) + " not reached in " +
                                   std::to_string(n) + " terms",
                               value, bound);
  }
  return {value, bound, LMethod::character_sum};
}

LValue l_value_smoothed(std::int64_t d) {
  require_fundamental(d);
  const double q = static_cast<double>(std::llabs(d));
  const auto n_max = static_cast<std::int64_t>(std::sqrt(kTMax * q));
  const bool odd = d < 0;
  double sum = 0;
  double abs_sum = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const int c = arith::kronecker(d, n);
    if (c == 0) continue;
    const double t = static_cast<double>(n) * static_cast<double>(n) / q;
    const double term = (odd ? g_odd(t) : g_even(t)) / static_cast<double>(n);
    sum += c * term;
    abs_sum += term;
  }
  // g(9) < 1.1e-12 and g decays like exp(-pi t), so the omitted terms sum to
  // less than g(9) (1/n_max + 1/(18 pi)).
  const double tail = 2e-12;
  return {sum, tail + 64 * std::numeric_limits<double>::epsilon() * abs_sum, LMethod::smoothed};
}

SmoothedLEvaluator::SmoothedLEvaluator(std::int64_t max_abs_d) : max_abs_d_(max_abs_d) {
  if (max_abs_d < 3 || max_abs_d > kMaxLDiscriminant) throw InvalidInput("smoothed L table: bad range");
  const auto n_max = static_cast<std::size_t>(std::ceil(std::sqrt(kTMax * static_cast<double>(max_abs_d)))) + 2;
  spf_.assign(n_max + 1, 0);
  for (std::size_t i = 2; i <= n_max; ++i)
    if (spf_[i] == 0)
      for (std::size_t j = i; j <= n_max; j += i)
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  log_n_.resize(n_max + 1);
  for (std::size_t i = 1; i <= n_max; ++i) log_n_[i] = std::log(static_cast<double>(i));
  u_step_ = 1.0 / 1024;
  u_min_ = -std::log(static_cast<double>(max_abs_d)) - 4 * u_step_;
  const double u_max = std::log(kTMax) + 4 * u_step_;
  const auto cells = static_cast<std::size_t>((u_max - u_min_) / u_step_) + 4;
  g_odd_.resize(cells);
  g_even_.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const double t = std::exp(u_min_ + (static_cast<double>(i) - 1) * u_step_);
    g_odd_[i] = g_odd(t);
    g_even_[i] = g_even(t);
  }
}

double SmoothedLEvaluator::weight(bool odd, double u) const {
  // cubic Lagrange through nodes i-1..i+2; table index k holds node k-1
  const double x = (u - u_min_) / u_step_;
  const auto i = static_cast<std::size_t>(x);
  const double f = x - static_cast<double>(i);
  const auto& g = odd ? g_odd_ : g_even_;
  const double y0 = g[i], y1 = g[i + 1], y2 = g[i + 2], y3 = g[i + 3];
  return y1 + 0.5 * f * (y2 - y0 + f * (2 * y0 - 5 * y1 + 4 * y2 - y3 + f * (3 * (y1 - y2) + y3 - y0)));
}

double SmoothedLEvaluator::operator()(std::int64_t d) const {
  const auto q = std::llabs(d);
  if (q > max_abs_d_) throw InvalidInput("smoothed L table: |d| beyond the table");
  require_fundamental(d);
  // n^2 <= kTMax |d| keeps every node inside the table
  const auto n_max = static_cast<std::size_t>(std::sqrt(kTMax * static_cast<double>(q)));
  const bool odd = d < 0;
  const double log_q = std::log(static_cast<double>(q));
  std::vector<signed char> chi(n_max + 1, 0);
  chi[1] = 1;
  double sum = weight(odd, -log_q);
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto p = spf_[n];
    chi[n] = p == n ? static_cast<signed char>(arith::kronecker(d, static_cast<std::int64_t>(n)))
                    : static_cast<signed char>(chi[p] * chi[n / p]);
    if (chi[n] == 0) continue;
    sum += chi[n] * weight(odd, 2 * log_n_[n] - log_q) / static_cast<double>(n);
  }
  return sum;
}

std::vector<std::pair<std::int64_t, double>> gh_probe_series(std::span<const std::int64_t> checkpoints) {
  if (checkpoints.empty()) return {};
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.front() < 1)
    throw InvalidInput("gh probe: checkpoints must be positive and ascending");
  const auto n_max = checkpoints.back();
  if (n_max > 1'000'000) throw CapExceeded("gh probe: N exceeds 10^6");
  std::vector<std::pair<std::int64_t, double>> out;
  if (n_max <= 5) {
    for (auto c : checkpoints) out.emplace_back(c, 0.0);
    return out;
  }
  const SmoothedLEvaluator eval(std::max<std::int64_t>(n_max, 3));
  std::size_t next = 0;
  long double sum = 0;
  disc::for_each_fundamental(n_max, disc::Sign::positive, [&](disc::FundamentalDiscriminant fd) {
    const auto d = fd.value();
    while (next < checkpoints.size() && d >= checkpoints[next]) out.emplace_back(checkpoints[next++], double(sum));
    sum += eval(d) / static_cast<long double>(d);
  });
  while (next < checkpoints.size()) out.emplace_back(checkpoints[next++], double(sum));
  return out;
}

double gh_divergence_probe(std::int64_t n) {
  const std::int64_t cp[] = {n};
  return gh_probe_series(cp).front().second;
}

}  // namespace clm::analytic
