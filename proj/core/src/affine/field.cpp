#include "clm/affine/field.hpp"

#include <algorithm>
#include <sstream>

#include "clm/arith/primes.hpp"
#include "clm/error.hpp"

namespace clm::affine {

namespace {

using Poly = std::vector<std::uint64_t>;  // low to high, trimmed

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const auto dm = m.size() - 1;
  const auto lead_inv = powmod(m.back(), p - 2, p);
  while (a.size() > dm) {
    const auto shift = a.size() - 1 - dm;
    const auto c = mulmod(a.back(), lead_inv, p);
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(a, b, p);
    std::swap(a, b);
  }
  return a;
}

void require_prime(std::uint64_t p) {
  if (p < 2 || !arith::is_prime(p)) throw InvalidInput("finite field: p = " + std::to_string(p) + " is not prime");
}

}  // namespace

std::uint64_t FiniteFieldSpec::q() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) r *= p;
  return r;
}

std::string to_string(const FiniteFieldSpec& spec) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = spec.modulus.size(); i-- > 0;) {
    const auto c = spec.modulus[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  os << " over F_" << spec.p;
  return os.str();
}

bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& monic) {
  require_prime(p);
  Poly f = monic;
  trim(f);
  if (f.size() < 2 || f.back() != 1) throw InvalidInput("irreducibility test: polynomial must be monic of degree >= 1");
  const auto n = f.size() - 1;
  if (n == 1) return true;
  Poly h{0, 1};
  for (std::size_t k = 1; k <= n / 2; ++k) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (poly_gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

FiniteFieldSpec find_irreducible(std::uint64_t p, unsigned n) {
  require_prime(p);
  if (n == 0) throw InvalidInput("finite field: degree must be positive");
  FiniteFieldSpec spec{p, n, {}};
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > kMaxFieldSize / p) throw CapExceeded("finite field: p^n exceeds 10^6");
    q *= p;
  }
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly f(n + 1, 0);
    auto c = code;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[n] = 1;
    if (is_irreducible(p, f)) {
      spec.modulus = std::move(f);
      return spec;
    }
  }
  throw InvariantViolation("finite field: no irreducible polynomial found");
}

FiniteField::FiniteField(FiniteFieldSpec spec) : spec_(std::move(spec)) {
  if (spec_.modulus.size() != spec_.n + 1 || !is_irreducible(spec_.p, spec_.modulus))
    throw InvalidInput("finite field: modulus is not a monic irreducible of degree n");
  q_ = spec_.q();
  if (q_ > kMaxFieldSize) throw CapExceeded("finite field: p^n exceeds 10^6");
  for (const auto& pp : arith::factor(q_ - 1)) unit_order_primes_.push_back(pp.prime);
}

std::vector<std::uint64_t> FiniteField::coordinates(FieldElement a) const {
  std::vector<std::uint64_t> c(spec_.n);
  for (unsigned i = 0; i < spec_.n; ++i) {
    c[i] = a % spec_.p;
    a /= spec_.p;
  }
  return c;
}

FieldElement FiniteField::from_coordinates(const std::vector<std::uint64_t>& c) const {
  FieldElement a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * spec_.p + c[i] % spec_.p;
  return a;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  auto ca = coordinates(a);
  const auto cb = coordinates(b);
  for (unsigned i = 0; i < spec_.n; ++i) ca[i] = (ca[i] + cb[i]) % spec_.p;
  return from_coordinates(ca);
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (spec_.n == 1) return mulmod(a, b, spec_.p);
  auto r = poly_mod(poly_mul(coordinates(a), coordinates(b), spec_.p), spec_.modulus, spec_.p);
  r.resize(spec_.n, 0);
  return from_coordinates(r);
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FiniteField::multiplicative_order(FieldElement a) const {
  if (a == 0 || a >= q_) throw InvalidInput("multiplicative order: not a unit");
  std::uint64_t ord = q_ - 1;
  for (auto r : unit_order_primes_)
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  return ord;
}

FieldElement FiniteField::primitive_element() const {
  for (FieldElement g = 1; g < q_; ++g)
    if (multiplicative_order(g) == q_ - 1) return g;
  throw InvariantViolation("finite field: no primitive element");
}

FieldElement element_of_order(const FiniteField& field, std::uint64_t d) {
  if (d == 0 || (field.q() - 1) % d != 0)
    throw InvalidInput("element_of_order: d = " + std::to_string(d) + " does not divide q - 1 = " +
                       std::to_string(field.q() - 1));
  const auto x = field.pow(field.primitive_element(), (field.q() - 1) / d);
  if (field.multiplicative_order(x) != d) throw InvariantViolation("element_of_order: wrong order");
  return x;
}

}  // namespace clm::affine
