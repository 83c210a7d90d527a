#include "clm/affine/affine_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "clm/error.hpp"

namespace clm::affine {

using group::Element;
using group::MatrixFp;

namespace {

std::uint64_t checked_q(std::uint64_t p, unsigned n) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > kMaxFieldSize / p) throw CapExceeded("affine group: p^n exceeds 10^6");
    q *= p;
  }
  return q;
}

void require_divides(std::uint64_t p, unsigned n, std::uint64_t d) {
  const auto q = checked_q(p, n);
  if (d == 0 || (q - 1) % d != 0)
    throw InvalidInput("affine group: d = " + std::to_string(d) + " does not divide q - 1 = " + std::to_string(q - 1));
}

MatrixFp block(const MatrixFp& lin, const std::vector<std::uint32_t>& b) {
  const auto n = lin.dim;
  MatrixFp m{n + 1, lin.p, std::vector<std::uint32_t>((n + 1) * (n + 1), 0)};
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t c = 0; c < n; ++c) m.entries[r * (n + 1) + c] = lin.at(r, c);
    m.entries[r * (n + 1) + n] = b[r];
  }
  m.entries[n * (n + 1) + n] = 1;
  return m;
}

MatrixFp linear_part(const MatrixFp& m) {
  const auto n = m.dim - 1;
  MatrixFp lin{n, m.p, std::vector<std::uint32_t>(n * n)};
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t c = 0; c < n; ++c) lin.entries[r * n + c] = m.at(r, c);
  return lin;
}

}  // namespace

AffineGroupSpec make_affine_spec(std::uint64_t p, unsigned n, std::uint64_t d) {
  require_divides(p, n, d);
  AffineGroupSpec spec;
  spec.field = find_irreducible(p, n);
  spec.d = d;
  const FiniteField field(spec.field);
  spec.x_d = element_of_order(field, d);
  const auto pp = static_cast<std::uint32_t>(p);
  spec.x_matrix = MatrixFp{n, pp, std::vector<std::uint32_t>(n * n)};
  std::uint64_t basis = 1;
  for (unsigned c = 0; c < n; ++c) {
    const auto col = field.coordinates(field.mul(spec.x_d, basis));
    for (unsigned r = 0; r < n; ++r) spec.x_matrix.entries[r * n + c] = static_cast<std::uint32_t>(col[r]);
    basis *= p;
  }
  return spec;
}

AffineGroup build_affine_group(const AffineGroupSpec& spec, std::size_t cap) {
  const auto n = spec.field.n;
  const auto p = static_cast<std::uint32_t>(spec.field.p);
  const auto q = spec.field.q();
  if (q * spec.d > cap)
    throw CapExceeded("order cap: G(" + std::to_string(q) + "," + std::to_string(spec.d) + ") has order " +
                      std::to_string(q * spec.d) + " > " + std::to_string(cap));
  const auto ident = MatrixFp::identity(n, p);
  std::vector<MatrixFp> gens;
  if (spec.d > 1) gens.push_back(block(spec.x_matrix, std::vector<std::uint32_t>(n, 0)));
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::uint32_t> b(n, 0);
    b[i] = 1;
    gens.push_back(block(ident, b));
  }
  const std::string label = "G(" + std::to_string(q) + "," + std::to_string(spec.d) + ")";
  AffineGroup out{spec, group::matrix_group_from_generators(gens, label, cap), {}};
  if (out.realization.group.order() != q * spec.d)
    throw InvariantViolation("affine group: realized order differs from q*d");
  for (Element x = 0; x < out.realization.matrices.size(); ++x) {
    const auto& m = out.realization.matrices[x];
    if (linear_part(m) == ident) out.decomposition.kernel.push_back(x);
    bool zero_b = true;
    for (unsigned r = 0; r < n; ++r) zero_b = zero_b && m.at(r, n) == 0;
    if (zero_b) out.decomposition.complement.push_back(x);
  }
  return out;
}

bool has_gi_by_theorem(std::uint64_t p, unsigned n, std::uint64_t d) {
  require_divides(p, n, d);
  if (d <= 2) return true;
  std::uint64_t pl = 1 % d;
  do {
    if (pl == d - 1) return true;
    pl = pl * (p % d) % d;
  } while (pl != 1 % d);
  return false;
}

int gi_count_by_theorem(std::uint64_t p, unsigned n, std::uint64_t d) { return has_gi_by_theorem(p, n, d) ? 1 : 0; }

int gi_count_refined(std::uint64_t p, unsigned n, std::uint64_t d) {
  require_divides(p, n, d);
  if (d == 2) return static_cast<int>(n / 2 + 1);
  return gi_count_by_theorem(p, n, d);
}

bool frobenius_checks(const group::CayleyGroup& g, const FrobeniusDecomposition& dec,
                      const group::SearchLimits& limits) {
  const auto& k = dec.kernel;
  const auto& h = dec.complement;
  if (k.size() * h.size() != g.order() || !g.is_subgroup(k) || !g.is_subgroup(h)) return false;
  std::vector<char> in_k(g.order(), 0);
  for (auto x : k) in_k[x] = 1;
  for (auto x : h)
    if (x != group::CayleyGroup::identity() && in_k[x]) return false;
  for (Element y = 0; y < g.order(); ++y)
    for (auto x : k)
      if (!in_k[g.conjugate(y, x)]) return false;
  if ((k.size() - 1) % h.size() != 0) return false;
  const auto aut = group::automorphism_group(g, limits);
  for (const auto& s : aut.strong_generators)
    for (auto x : k)
      if (!in_k[s[x]]) return false;
  return true;
}

std::size_t max_fixed_points(const AffineGroup& g) {
  const auto n = g.spec.field.n;
  const auto p = g.spec.field.p;
  const auto q = g.spec.field.q();
  std::size_t worst = 0;
  std::vector<std::uint64_t> v(n);
  for (const auto& m : g.realization.matrices) {
    if (m == MatrixFp::identity(n + 1, static_cast<std::uint32_t>(p))) continue;
    std::size_t fixed = 0;
    for (std::uint64_t code = 0; code < q; ++code) {
      auto c = code;
      for (unsigned i = 0; i < n; ++i) {
        v[i] = c % p;
        c /= p;
      }
      bool is_fixed = true;
      for (unsigned r = 0; r < n && is_fixed; ++r) {
        std::uint64_t s = m.at(r, n);
        for (unsigned j = 0; j < n; ++j) s += static_cast<std::uint64_t>(m.at(r, j)) * v[j];
        is_fixed = s % p == v[r];
      }
      if (is_fixed) ++fixed;
    }
    worst = std::max(worst, fixed);
  }
  return worst;
}

AutStructure aut_structure_check(const AffineGroupSpec& spec, const group::SearchLimits& limits) {
  const auto n = spec.field.n;
  const auto p = spec.field.p;
  const auto q = spec.field.q();
  // |GL_n(F_p)| = prod (q - p^i)
  std::uint64_t gl = 1;
  std::uint64_t pi = 1;
  for (unsigned i = 0; i < n; ++i) {
    gl *= q - pi;
    pi *= p;
    if (gl > kMaxGLScan) throw CapExceeded("aut structure check: |GL_n(F_p)| exceeds 10^5");
  }
  const auto pp = static_cast<std::uint32_t>(p);
  // Powers of X_d coprime to d generate <X_d>; M normalizes iff M X M^-1 is one of them.
  std::vector<MatrixFp> generators_of_h;
  {
    MatrixFp power = MatrixFp::identity(n, pp);
    for (std::uint64_t k = 0; k < spec.d; ++k) {
      if (std::gcd(k, spec.d) == 1) generators_of_h.push_back(power);
      power = power * spec.x_matrix;
    }
  }
  AutStructure out;
  out.q = q;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= p;
  MatrixFp m{n, pp, std::vector<std::uint32_t>(cells, 0)};
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      m.entries[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (m.determinant() == 0) continue;
    const auto mx = m * spec.x_matrix;
    for (const auto& y : generators_of_h)
      if (mx == y * m) {
        ++out.normalizer_order;
        break;
      }
  }
  const auto g = build_affine_group(spec, std::max<std::size_t>(group::kDefaultCayleyCap, q * spec.d));
  out.aut_order = group::automorphism_group(g.realization.group, limits).order;
  return out;
}

}  // namespace clm::affine
