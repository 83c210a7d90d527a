#include "clm/group/standard_groups.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "clm/error.hpp"

namespace clm::group {
namespace {

Permutation cycle_perm(std::size_t degree, std::span<const std::uint32_t> cycle) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

// Group whose elements are 0..n-1 under `mul`, realised through its left
// regular representation so the closure machinery assigns indices.
template <class Mul>
CayleyGroup from_rule(std::size_t n, Mul mul, std::span<const std::uint32_t> gens, std::string label,
                      std::size_t cap) {
  std::vector<Permutation> perms;
  for (std::uint32_t g : gens) {
    Permutation p(n);
    for (std::uint32_t x = 0; x < n; ++x) p[x] = mul(g, x);
    perms.push_back(std::move(p));
  }
  return group_from_generators(perms, std::move(label), cap);
}

}  // namespace

CayleyGroup standard_group(Preset preset, int parameter, std::size_t cap) {
  const std::string tag = std::to_string(parameter);
  switch (preset) {
    case Preset::cyclic: {
      if (parameter < 1) throw InvalidInput("cyclic group order must be positive");
      const auto n = static_cast<std::size_t>(parameter);
      if (n > cap) throw CapExceeded("order cap: C" + tag);
      std::vector<std::uint32_t> cyc(n);
      for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<std::uint32_t>(i);
      std::vector<Permutation> g{cycle_perm(n, cyc)};
      return group_from_generators(g, "C" + tag, cap);
    }
    case Preset::abelian_product: {
      if (parameter < 0) throw InvalidInput("rank must be non-negative");
      std::vector<int> orders(static_cast<std::size_t>(parameter), 2);
      return abelian_group(orders, cap);
    }
    case Preset::dihedral: {
      if (parameter < 4 || parameter % 2) throw InvalidInput("dihedral order must be even and at least 4");
      const std::uint32_t m = static_cast<std::uint32_t>(parameter / 2);
      // Elements r^i s^j as i + m*j; s r s = r^-1.
      auto mul = [m](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        const std::uint32_t ia = a % m, ja = a / m, ib = b % m, jb = b / m;
        const std::uint32_t i = ja ? (ia + m - ib) % m : (ia + ib) % m;
        return i + m * (ja ^ jb);
      };
      const std::uint32_t gens[] = {1, m};
      return from_rule(2 * m, mul, gens, "D" + tag, cap);
    }
    case Preset::quaternion: {
      if (parameter < 8 || parameter % 4) throw InvalidInput("quaternion order must be a multiple of 4, at least 8");
      const std::uint32_t m = static_cast<std::uint32_t>(parameter / 4);
      const std::uint32_t n2 = 2 * m;  // order of a
      // Elements a^i x^j as i + n2*j with x^2 = a^m and x a x^-1 = a^-1.
      auto mul = [m, n2](std::uint32_t u, std::uint32_t v) -> std::uint32_t {
        const std::uint32_t iu = u % n2, ju = u / n2, iv = v % n2, jv = v / n2;
        std::uint32_t i = ju ? (iu + n2 - iv) % n2 : (iu + iv) % n2;
        std::uint32_t j = ju ^ jv;
        if (ju && jv) i = (i + m) % n2;
        return i + n2 * j;
      };
      const std::uint32_t gens[] = {1, n2};
      return from_rule(2 * n2, mul, gens, "Q" + tag, cap);
    }
    case Preset::symmetric:
    case Preset::alternating: {
      const bool alt = preset == Preset::alternating;
      if (parameter < (alt ? 3 : 2)) throw InvalidInput("degree too small");
      const auto n = static_cast<std::size_t>(parameter);
      std::vector<Permutation> gens;
      if (alt) {
        for (std::uint32_t i = 2; i < n; ++i) {
          const std::uint32_t c[] = {0, 1, i};
          gens.push_back(cycle_perm(n, c));
        }
      } else {
        const std::uint32_t t[] = {0, 1};
        gens.push_back(cycle_perm(n, t));
        if (n > 2) {
          std::vector<std::uint32_t> c(n);
          for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>(i);
          gens.push_back(cycle_perm(n, c));
        }
      }
      return group_from_generators(gens, (alt ? "A" : "S") + tag, cap);
    }
  }
  throw InvalidInput("unknown preset");
}

CayleyGroup abelian_group(std::span<const int> cyclic_orders, std::size_t cap) {
  std::size_t degree = 0;
  std::size_t order = 1;
  std::string label;
  for (int n : cyclic_orders) {
    if (n < 1) throw InvalidInput("cyclic factor order must be positive");
    degree += static_cast<std::size_t>(n);
    order *= static_cast<std::size_t>(n);
    if (order > cap) throw CapExceeded("order cap: abelian product exceeds " + std::to_string(cap));
    label += (label.empty() ? "C" : "xC") + std::to_string(n);
  }
  if (cyclic_orders.empty()) {
    std::vector<Permutation> g{Permutation{0}};
    return group_from_generators(g, "C1", cap);
  }
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (int n : cyclic_orders) {
    std::vector<std::uint32_t> cyc;
    for (int i = 0; i < n; ++i) cyc.push_back(static_cast<std::uint32_t>(offset + static_cast<std::size_t>(i)));
    gens.push_back(cycle_perm(degree, cyc));
    offset += static_cast<std::size_t>(n);
  }
  return group_from_generators(gens, label, cap);
}

CayleyGroup group_from_name(std::string_view name, std::size_t cap) {
  std::vector<CayleyGroup> factors;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t end = name.find('x', start);
    if (end == std::string_view::npos) end = name.size();
    const std::string_view tok = name.substr(start, end - start);
    if (tok.size() < 2) throw InvalidInput("malformed group name '" + std::string(name) + "'");
    int n = 0;
    const auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), n);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidInput("malformed group name '" + std::string(name) + "'");
    }
    Preset preset;
    switch (tok[0]) {
      case 'c': case 'C': preset = Preset::cyclic; break;
      case 'd': case 'D': preset = Preset::dihedral; break;
      case 'q': case 'Q': preset = Preset::quaternion; break;
      case 's': case 'S': preset = Preset::symmetric; break;
      case 'a': case 'A': preset = Preset::alternating; break;
      default: throw InvalidInput("unknown group family in '" + std::string(tok) + "'");
    }
    factors.push_back(standard_group(preset, n, cap));
    start = end + 1;
  }
  CayleyGroup g = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (g.order() * factors[i].order() > cap) throw CapExceeded("order cap: " + std::string(name));
    g = direct_product(g, factors[i]);
  }
  return g;
}

}  // namespace clm::group
