#include "clm/group/gi.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "clm/error.hpp"
#include "clm/group/invariants.hpp"
#include "clm/group/perm_group.hpp"
#include "partial_hom.hpp"

namespace clm::group {

namespace {

bool generates_all(const CayleyGroup& g, std::span<const Element> elements) {
  SubgroupBuilder b(g);
  for (auto x : elements) {
    b.add(x);
    if (b.size() == g.order()) return true;
  }
  return b.size() == g.order();
}

bool is_gi_map(const CayleyGroup& g, std::span<const Element> sigma) {
  std::vector<Element> inverted;
  for (Element x = 0; x < sigma.size(); ++x) {
    if (sigma[sigma[x]] != x) return false;
    if (sigma[x] == g.inv(x)) inverted.push_back(x);
  }
  return generates_all(g, inverted);
}

// One element per coset of Z(G); conjugation by these lists Inn(G) once each.
std::vector<Element> inner_representatives(const CayleyGroup& g) {
  const auto z = g.center();
  std::vector<char> covered(g.order(), 0);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (auto c : z) covered[g.mul(x, c)] = 1;
  }
  return reps;
}

// Least image array in the coset sigma * Inn(G).
std::vector<Element> coset_key(const CayleyGroup& g, std::span<const Element> inner, std::span<const Element> sigma) {
  const auto n = g.order();
  std::vector<Element> live(inner.begin(), inner.end());
  std::vector<Element> key(n);
  std::vector<Element> next;
  for (Element x = 0; x < n; ++x) {
    if (live.size() == 1) {
      const auto h = live.front();
      for (Element y = x; y < n; ++y) key[y] = sigma[g.conjugate(h, y)];
      break;
    }
    Element best = static_cast<Element>(n);
    next.clear();
    for (auto h : live) {
      const auto v = sigma[g.conjugate(h, x)];
      if (v < best) {
        best = v;
        next.clear();
      }
      if (v == best) next.push_back(h);
    }
    key[x] = best;
    live.swap(next);
  }
  return key;
}

}  // namespace

bool is_gi_automorphism(const CayleyGroup& g, const Automorphism& sigma) {
  if (!sigma.is_involution()) return false;
  return generates_all(g, sigma.inverted_set());
}

bool is_generated_by_involutions(const CayleyGroup& g) {
  if (g.order() == 1) return true;
  return generates_all(g, g.involutions());
}

CayleyGroup build_semidirect_c2(const CayleyGroup& g, const Automorphism& sigma) {
  if (sigma.image().size() != g.order()) throw InvalidInput("semidirect product: automorphism of another group");
  if (!sigma.is_involution()) throw InvalidInput("semidirect product: sigma is not an involution");
  const auto n = g.order();
  const auto m = 2 * n;
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto g1 = static_cast<Element>(a % n);
    const auto e1 = a / n;
    for (std::size_t b = 0; b < m; ++b) {
      const auto g2 = static_cast<Element>(b % n);
      const auto e2 = b / n;
      const Element twisted = e1 ? sigma(g2) : g2;
      table[a * m + b] = static_cast<Element>(g.mul(g1, twisted) + ((e1 + e2) % 2) * n);
    }
  }
  std::vector<Element> gens(g.generators().begin(), g.generators().end());
  gens.push_back(static_cast<Element>(n));
  return CayleyGroup(m, std::move(table), std::move(gens), g.label() + ":c2", Validation::structural);
}

bool is_gi_extension_direct(const CayleyGroup& extension, std::span<const Element> subgroup) {
  if (subgroup.size() * 2 != extension.order() || !extension.is_subgroup(subgroup))
    throw InvalidInput("GI extension test: not a subgroup of index 2");
  std::vector<char> inside(extension.order(), 0);
  for (auto x : subgroup) inside[x] = 1;
  std::vector<Element> outer_involutions;
  for (Element x = 0; x < extension.order(); ++x)
    if (!inside[x] && extension.mul(x, x) == CayleyGroup::identity()) outer_involutions.push_back(x);
  return generates_all(extension, outer_involutions);
}

GIReport gi_extension_count(const CayleyGroup& g, const SearchLimits& limits) {
  const auto aut = automorphism_group(g, limits);
  const auto n = g.order();
  const auto inner = inner_representatives(g);
  GIReport report;
  report.aut_order = aut.order;
  report.out_order = aut.order / inner.size();
  report.generated_by_involutions = is_generated_by_involutions(g);

  // Inverted tuples h_1..h_j (sigma(h_i) = h_i^-1, each outside the span of
  // the previous ones), explored up to the pointwise stabilizer in Aut(G).
  detail::PartialHom ph(g, g);
  std::set<std::vector<Element>> leaves;
  // Nodes with the same partial map have the same extensions; the first
  // visit already finds one of each up to its own stabilizer.
  std::set<std::vector<Element>> states;
  std::vector<Element> hs;
  std::vector<Element> hinv;
  auto rec = [&](auto&& self, const std::vector<Perm>& stab, std::uint64_t stab_order) -> void {
    if (ph.total()) {
      leaves.insert(ph.map());
      return;
    }
    if (!states.insert(ph.map()).second) return;
    std::vector<char> seen(n, 0);
    std::vector<std::pair<Element, std::size_t>> reps;  // (least point, orbit size)
    for (Element x = 0; x < n; ++x) {
      if (seen[x] || ph.defined(x)) continue;
      const auto orbit = orbit_of(x, stab, n);
      for (auto y : orbit) seen[y] = 1;
      reps.emplace_back(x, orbit.size());
    }
    for (auto [x, size] : reps) {
      hs.push_back(x);
      hinv.push_back(g.inv(x));
      if (ph.assign(hs, hinv)) {
        const auto child_order = stab_order / size;
        std::vector<Perm> child;
        if (child_order > 1) {
          const std::uint32_t prefix[] = {x};
          child = PermGroup(n, stab, stab_order, prefix).stabilizer_generators(1);
        }
        self(self, child, child_order);
      }
      hs.pop_back();
      hinv.pop_back();
      ph.assign(hs, hinv);
    }
  };
  ph.assign(hs, hinv);
  rec(rec, aut.strong_generators, aut.order);

  // Merge leaves into Out-classes: BFS over Inn-cosets under conjugation by
  // the generators of Aut(G).
  std::vector<std::vector<Element>> gen_inv;
  for (const auto& s : aut.strong_generators) gen_inv.push_back(inverse_map(s));
  std::set<std::vector<Element>> visited;
  std::vector<std::vector<std::vector<Element>>> classes;  // coset keys per class
  for (const auto& leaf : leaves) {
    auto key = coset_key(g, inner, leaf);
    if (visited.count(key)) continue;
    std::vector<std::vector<Element>> orbit{key};
    visited.insert(std::move(key));
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t s = 0; s < aut.strong_generators.size(); ++s) {
        const auto conj = compose_maps(aut.strong_generators[s], compose_maps(orbit[i], gen_inv[s]));
        auto k = coset_key(g, inner, conj);
        if (visited.insert(k).second) {
          if (visited.size() > limits.max_out_class_cosets)
            throw CapExceeded("GI search: more than " + std::to_string(limits.max_out_class_cosets) +
                              " Inn-cosets visited");
          orbit.push_back(std::move(k));
        }
      }
    }
    classes.push_back(std::move(orbit));
  }

  std::set<GroupFingerprint> fps;
  for (const auto& cls : classes) {
    const auto& least = *std::min_element(cls.begin(), cls.end());
    std::vector<Element> best;
    for (auto h : inner) {
      std::vector<Element> m(n);
      for (Element x = 0; x < n; ++x) m[x] = least[g.conjugate(h, x)];
      if (is_gi_map(g, m) && (best.empty() || m < best)) best = std::move(m);
    }
    if (best.empty()) throw InvariantViolation("GI search: Out-class without a GI-automorphism");
    auto rep = Automorphism::trusted(g, std::move(best));
    fps.insert(fingerprint(build_semidirect_c2(g, rep)));
    report.gi_automorphism_reps.push_back(std::move(rep));
  }
  std::sort(report.gi_automorphism_reps.begin(), report.gi_automorphism_reps.end());
  report.gi_extension_count = report.gi_automorphism_reps.size();
  report.has_gi = report.gi_extension_count > 0;
  report.distinct_extension_fingerprints = fps.size();
  return report;
}

std::size_t gi_extension_count_enumerated(const CayleyGroup& g, const OutClassPartition& partition) {
  std::size_t count = 0;
  for (const auto& cls : partition.out_classes) {
    bool hit = false;
    for (auto c : cls) {
      for (auto i : partition.cosets[c]) {
        if (is_gi_automorphism(g, partition.automorphisms[i])) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (hit) ++count;
  }
  return count;
}

}  // namespace clm::group
