#pragma once
// L(1, chi_D) through the analytic class number formula. Class numbers come
// from counting reduced binary quadratic forms; the real-quadratic regulator
// from the continued fraction of (b + sqrt D)/2. Only for small |D|.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>

namespace oracle {

// Reduced positive definite forms (a, b, c) with b^2 - 4ac = d < 0.
inline std::int64_t class_number_negative(std::int64_t d) {
  std::int64_t h = 0;
  for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if ((b * b - d) % (4 * a) != 0) continue;
      const std::int64_t c = (b * b - d) / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

struct FundamentalUnit {
  double log_epsilon;
  int norm;
};

// Convergents p/q of omega = (b + sqrt d)/2 until p - q*omega' is a unit.
inline FundamentalUnit fundamental_unit(std::int64_t d) {
  __extension__ typedef __int128 wide;
  const std::int64_t b = d % 2;
  const double s = std::sqrt(static_cast<double>(d));
  auto isqrt = [](std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  };
  const std::int64_t r = isqrt(d);
  std::int64_t big_p = b, big_q = 2;
  wide pm2 = 0, pm1 = 1, qm2 = 1, qm1 = 0;
  while (true) {
    const std::int64_t a = (big_p + r) / big_q;
    const wide p = a * pm1 + pm2;
    const wide q = a * qm1 + qm2;
    const wide norm = p * p - b * p * q + q * q * ((b * b - d) / 4);
    if (norm == 1 || norm == -1) {
      const double pd = static_cast<double>(p), qd = static_cast<double>(q);
      return {std::log(pd + qd * (s - static_cast<double>(b)) / 2.0), norm == 1 ? 1 : -1};
    }
    pm2 = pm1;
    pm1 = p;
    qm2 = qm1;
    qm1 = q;
    big_p = a * big_q - big_p;
    big_q = (d - big_p * big_p) / big_q;
  }
}

// Narrow class number: cycles of reduced indefinite forms under the
// reduction step rho.
inline std::int64_t narrow_class_number_positive(std::int64_t d) {
  const double s = std::sqrt(static_cast<double>(d));
  using Form = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  std::set<Form> forms;
  for (std::int64_t b = 1; static_cast<double>(b) < s; ++b) {
    if ((b - d) % 2 != 0) continue;
    for (std::int64_t aa = 1; static_cast<double>(aa) < s; ++aa) {
      if (!(s - static_cast<double>(b) < 2.0 * static_cast<double>(aa) &&
            2.0 * static_cast<double>(aa) < s + static_cast<double>(b)))
        continue;
      for (std::int64_t a : {aa, -aa}) {
        if ((b * b - d) % (4 * a) != 0) continue;
        const std::int64_t c = (b * b - d) / (4 * a);
        if (std::gcd(std::gcd(aa, b), c < 0 ? -c : c) != 1) continue;
        forms.emplace(a, b, c);
      }
    }
  }
  auto rho = [&](const Form& f) {
    const auto [a, b, c] = f;
    (void)a;
    const std::int64_t ac = c < 0 ? -c : c;
    std::int64_t bp = ((-b) % (2 * ac) + 2 * ac) % (2 * ac);
    while (static_cast<double>(bp) < s - 2.0 * static_cast<double>(ac)) bp += 2 * ac;
    while (static_cast<double>(bp) > s) bp -= 2 * ac;
    return Form{c, bp, (bp * bp - d) / (4 * c)};
  };
  std::set<Form> seen;
  std::int64_t cycles = 0;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    ++cycles;
    Form g = f;
    while (!seen.count(g)) {
      seen.insert(g);
      g = rho(g);
    }
  }
  return cycles;
}

// Returns L(1, chi_d) for a fundamental discriminant d; rounding only.
inline double l_value_class_number(std::int64_t d) {
  constexpr double pi = std::numbers::pi;
  if (d < 0) {
    const double w = d == -3 ? 6.0 : d == -4 ? 4.0 : 2.0;
    return 2.0 * pi * static_cast<double>(class_number_negative(d)) / (w * std::sqrt(static_cast<double>(-d)));
  }
  const auto unit = fundamental_unit(d);
  const std::int64_t hp = narrow_class_number_positive(d);
  const std::int64_t h = unit.norm == -1 ? hp : hp / 2;
  return 2.0 * static_cast<double>(h) * unit.log_epsilon / std::sqrt(static_cast<double>(d));
}

}  // namespace oracle
