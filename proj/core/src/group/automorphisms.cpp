#include "clm/group/automorphisms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "clm/error.hpp"
#include "clm/group/perm_group.hpp"
#include "partial_hom.hpp"

namespace clm::group {

namespace detail {

std::vector<Element> conjugacy_class_sizes(const CayleyGroup& g) {
  const auto n = g.order();
  std::vector<Element> size(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<Element> cls;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    cls.clear();
    for (Element y = 0; y < n; ++y) {
      const auto c = g.conjugate(y, x);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    for (auto c : cls) size[c] = static_cast<Element>(cls.size());
  }
  return size;
}

std::vector<std::uint64_t> element_types(const CayleyGroup& g) {
  const auto n = g.order();
  const auto cls = conjugacy_class_sizes(g);
  std::vector<std::uint64_t> roots(n, 0);
  for (Element y = 0; y < n; ++y) ++roots[g.mul(y, y)];
  std::vector<std::uint64_t> t(n);
  for (Element x = 0; x < n; ++x)
    t[x] = (static_cast<std::uint64_t>(g.element_order(x)) << 40) | (static_cast<std::uint64_t>(cls[x]) << 20) |
           roots[x];
  return t;
}

std::vector<Element> generating_tuple(const CayleyGroup& g) {
  std::vector<Element> tuple;
  SubgroupBuilder current(g);
  while (current.size() < g.order()) {
    Element best = 0;
    std::size_t best_size = 0;
    for (Element x = 1; x < g.order(); ++x) {
      if (current.contains(x)) continue;
      SubgroupBuilder trial = current;
      trial.add(x);
      if (trial.size() > best_size) {
        best_size = trial.size();
        best = x;
      }
    }
    tuple.push_back(best);
    current.add(best);
  }
  return tuple;
}

}  // namespace detail

using detail::PartialHom;

Automorphism::Automorphism(const CayleyGroup& g, std::vector<Element> image) : image_(std::move(image)) {
  involution_ = true;
  for (Element x = 0; x < image_.size(); ++x) {
    if (image_[image_[x]] != x) involution_ = false;
    if (image_[x] == g.inv(x)) inverted_.push_back(x);
  }
}

Automorphism Automorphism::trusted(const CayleyGroup& g, std::vector<Element> image) {
  if (image.size() != g.order()) throw InvalidInput("automorphism: image size differs from group order");
  return Automorphism(g, std::move(image));
}

Automorphism Automorphism::checked(const CayleyGroup& g, std::vector<Element> image) {
  const auto n = g.order();
  if (image.size() != n) throw InvalidInput("automorphism: image size differs from group order");
  std::vector<char> hit(n, 0);
  for (auto y : image) {
    if (y >= n || hit[y]) throw InvalidInput("automorphism: image is not a bijection");
    hit[y] = 1;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (image[g.mul(a, b)] != g.mul(image[a], image[b]))
        throw InvalidInput("automorphism: map does not preserve the multiplication table");
  return Automorphism(g, std::move(image));
}

bool Automorphism::is_identity() const noexcept {
  for (Element x = 0; x < image_.size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::vector<Element> compose_maps(std::span<const Element> a, std::span<const Element> b) {
  std::vector<Element> r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

std::vector<Element> inverse_map(std::span<const Element> a) {
  std::vector<Element> r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<Element>(x);
  return r;
}

std::vector<Element> conjugation_map(const CayleyGroup& g, Element by) {
  std::vector<Element> r(g.order());
  for (Element x = 0; x < g.order(); ++x) r[x] = g.conjugate(by, x);
  return r;
}

namespace {

void require_order(const CayleyGroup& g, const SearchLimits& limits) {
  if (g.order() > limits.max_group_order)
    throw CapExceeded("automorphism search: |G| = " + std::to_string(g.order()) + " exceeds the cap " +
                      std::to_string(limits.max_group_order));
}

struct Candidates {
  std::vector<Element> base;
  std::vector<std::vector<Element>> images;  // per base element, same type
};

Candidates candidates_for(const CayleyGroup& src, const CayleyGroup& dst) {
  Candidates c;
  c.base = detail::generating_tuple(src);
  const auto ts = detail::element_types(src);
  const auto td = detail::element_types(dst);
  for (auto b : c.base) {
    std::vector<Element> v;
    for (Element y = 0; y < dst.order(); ++y)
      if (td[y] == ts[b]) v.push_back(y);
    c.images.push_back(std::move(v));
  }
  return c;
}

// Depth-first search over images of base[level..]; calls visit(map) on every
// complete homomorphism. visit returns false to stop.
template <typename Visit>
bool search_images(PartialHom& ph, const Candidates& c, std::vector<Element>& imgs, std::size_t level, Visit& visit) {
  if (level == c.base.size()) return visit(ph.map());
  for (auto y : c.images[level]) {
    imgs.push_back(y);
    const bool ok = ph.assign(std::span(c.base).first(level + 1), imgs);
    bool go_on = true;
    if (ok) go_on = search_images(ph, c, imgs, level + 1, visit);
    imgs.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

AutomorphismGroup automorphism_group(const CayleyGroup& g, const SearchLimits& limits) {
  require_order(g, limits);
  AutomorphismGroup aut;
  const auto cands = candidates_for(g, g);
  aut.base = cands.base;
  const std::size_t k = aut.base.size();
  aut.basic_orbits.resize(k);
  PartialHom ph(g, g);

  for (std::size_t l = k; l-- > 0;) {
    auto orbit = orbit_of(aut.base[l], aut.strong_generators, g.order());
    std::vector<char> in_orbit(g.order(), 0);
    for (auto x : orbit) in_orbit[x] = 1;
    for (auto c : cands.images[l]) {
      if (in_orbit[c]) continue;
      std::vector<Element> imgs(aut.base.begin(), aut.base.begin() + static_cast<std::ptrdiff_t>(l));
      imgs.push_back(c);
      if (!ph.assign(std::span(aut.base).first(l + 1), imgs)) continue;
      std::vector<Element> found;
      auto take_first = [&](const std::vector<Element>& m) {
        found = m;
        return false;
      };
      search_images(ph, cands, imgs, l + 1, take_first);
      if (found.empty()) continue;
      aut.strong_generators.push_back(std::move(found));
      orbit = orbit_of(aut.base[l], aut.strong_generators, g.order());
      for (auto x : orbit) in_orbit[x] = 1;
    }
    if (__builtin_mul_overflow(aut.order, static_cast<std::uint64_t>(orbit.size()), &aut.order))
      throw CapExceeded("automorphism search: |Aut(G)| overflows 64 bits");
    aut.basic_orbits[l] = std::move(orbit);
  }
  return aut;
}

std::vector<std::vector<Element>> enumerate_automorphisms(const CayleyGroup& g, const AutomorphismGroup& aut,
                                                          const SearchLimits& limits) {
  require_order(g, limits);
  if (aut.order > limits.max_enumerated)
    throw CapExceeded("automorphism listing: |Aut(G)| = " + std::to_string(aut.order) + " exceeds the cap " +
                      std::to_string(limits.max_enumerated));
  const auto cands = candidates_for(g, g);
  PartialHom ph(g, g);
  std::vector<std::vector<Element>> all;
  all.reserve(static_cast<std::size_t>(aut.order));
  std::vector<Element> imgs;
  ph.assign({}, {});
  auto collect = [&](const std::vector<Element>& m) {
    all.push_back(m);
    return true;
  };
  search_images(ph, cands, imgs, 0, collect);
  if (all.size() != aut.order)
    throw InvariantViolation("automorphism listing found " + std::to_string(all.size()) + " maps, expected " +
                             std::to_string(aut.order));
  std::sort(all.begin(), all.end());
  return all;
}

OutClassPartition automorphisms(const CayleyGroup& g, const SearchLimits& limits) {
  const auto aut = automorphism_group(g, limits);
  auto maps = enumerate_automorphisms(g, aut, limits);
  const auto n = g.order();
  OutClassPartition out;
  out.center_order = g.center().size();
  auto index_of = [&](const std::vector<Element>& m) {
    const auto it = std::lower_bound(maps.begin(), maps.end(), m);
    if (it == maps.end() || *it != m) throw InvariantViolation("automorphism listing is not closed");
    return static_cast<std::size_t>(it - maps.begin());
  };

  std::vector<char> is_inner(maps.size(), 0);
  for (Element x = 0; x < n; ++x) is_inner[index_of(conjugation_map(g, x))] = 1;
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (is_inner[i]) out.inner.push_back(i);
  if (out.inner.size() * out.center_order != n)
    throw InvariantViolation("|Inn(G)| * |Z(G)| != |G|");
  if (maps.size() % out.inner.size() != 0) throw InvariantViolation("|Inn(G)| does not divide |Aut(G)|");

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(maps.size(), kNone);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (coset_of[i] != kNone) continue;
    std::vector<std::size_t> members;
    for (auto j : out.inner) members.push_back(index_of(compose_maps(maps[i], maps[j])));
    std::sort(members.begin(), members.end());
    for (auto m : members) coset_of[m] = out.cosets.size();
    out.cosets.push_back(std::move(members));
  }

  // Out-classes: union cosets joined by conjugation with a generator of Aut.
  std::vector<std::size_t> parent(out.cosets.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<Element>> gen_inv;
  for (const auto& s : aut.strong_generators) gen_inv.push_back(inverse_map(s));
  for (std::size_t c = 0; c < out.cosets.size(); ++c) {
    const auto& sigma = maps[out.cosets[c].front()];
    for (std::size_t s = 0; s < aut.strong_generators.size(); ++s) {
      const auto conj = compose_maps(aut.strong_generators[s], compose_maps(sigma, gen_inv[s]));
      const auto a = find(c);
      const auto b = find(coset_of[index_of(conj)]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> class_slot(out.cosets.size(), kNone);
  for (std::size_t c = 0; c < out.cosets.size(); ++c) {
    const auto r = find(c);
    if (class_slot[r] == kNone) {
      class_slot[r] = out.out_classes.size();
      out.out_classes.emplace_back();
    }
    out.out_classes[class_slot[r]].push_back(c);
  }

  out.automorphisms.reserve(maps.size());
  for (auto& m : maps) out.automorphisms.push_back(Automorphism::trusted(g, std::move(m)));
  return out;
}

std::vector<Automorphism> involutive_automorphisms(const CayleyGroup& g, const SearchLimits& limits) {
  require_order(g, limits);
  const auto cands = candidates_for(g, g);
  PartialHom ph(g, g);
  std::vector<std::vector<Element>> found;
  std::vector<Element> gens;
  std::vector<Element> imgs;

  auto rec = [&](auto&& self) -> void {
    if (ph.total()) {
      if (found.size() >= limits.max_enumerated)
        throw CapExceeded("involution listing exceeds the cap " + std::to_string(limits.max_enumerated));
      found.push_back(ph.map());
      return;
    }
    std::size_t level = 0;
    while (ph.defined(cands.base[level])) ++level;
    const auto t = cands.base[level];
    for (auto x : cands.images[level]) {
      const std::size_t mark = gens.size();
      gens.push_back(t);
      imgs.push_back(x);
      if (x != t) {
        gens.push_back(x);
        imgs.push_back(t);
      }
      if (ph.assign(gens, imgs)) self(self);
      gens.resize(mark);
      imgs.resize(mark);
      ph.assign(gens, imgs);  // restore state for the next sibling
    }
  };
  ph.assign(gens, imgs);
  rec(rec);
  std::sort(found.begin(), found.end());
  std::vector<Automorphism> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(Automorphism::trusted(g, std::move(m)));
  return out;
}

std::vector<Element> find_isomorphism(const CayleyGroup& g, const CayleyGroup& h) {
  if (g.order() != h.order()) return {};
  auto tg = detail::element_types(g);
  auto th = detail::element_types(h);
  std::sort(tg.begin(), tg.end());
  std::sort(th.begin(), th.end());
  if (tg != th) return {};
  const auto cands = candidates_for(g, h);
  PartialHom ph(g, h);
  std::vector<Element> found;
  std::vector<Element> imgs;
  ph.assign({}, {});
  auto take_first = [&](const std::vector<Element>& m) {
    found = m;
    return false;
  };
  search_images(ph, cands, imgs, 0, take_first);
  return found;
}

}  // namespace clm::group
