#pragma once
// Brute-force group oracles: every bijection fixing the identity is tried, so
// they are only usable for |G| <= 8. Nothing here calls the library's search.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "clm/group/cayley_group.hpp"

namespace oracle {

using clm::group::CayleyGroup;
using clm::group::Element;
using Map = std::vector<Element>;

inline std::vector<Map> all_automorphisms(const CayleyGroup& g) {
  const auto n = g.order();
  Map perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Map> out;
  do {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b) ok = perm[g.mul(a, b)] == g.mul(perm[a], perm[b]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

inline Map compose(const Map& a, const Map& b) {
  Map r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

inline Map invert(const Map& a) {
  Map r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<Element>(x);
  return r;
}

inline bool gi(const CayleyGroup& g, const Map& s) {
  std::vector<Element> inv;
  for (Element x = 0; x < s.size(); ++x) {
    if (s[s[x]] != x) return false;
    if (s[x] == g.inv(x)) inv.push_back(x);
  }
  return g.generates(inv);
}

// Out-classes with a GI member, counted via explicit coset sets.
inline std::size_t gi_count(const CayleyGroup& g) {
  const auto auts = all_automorphisms(g);
  std::set<Map> inner;
  for (Element h = 0; h < g.order(); ++h) {
    Map c(g.order());
    for (Element x = 0; x < g.order(); ++x) c[x] = g.mul(g.mul(h, x), g.inv(h));
    inner.insert(c);
  }
  auto coset = [&](const Map& s) {
    std::set<Map> c;
    for (const auto& i : inner) c.insert(compose(s, i));
    return c;
  };
  std::set<std::set<Map>> counted;
  std::size_t count = 0;
  for (const auto& s : auts) {
    if (!gi(g, s)) continue;
    auto c = coset(s);
    if (counted.count(c)) continue;
    ++count;
    for (const auto& t : auts) counted.insert(coset(compose(t, compose(s, invert(t)))));
  }
  return count;
}

}  // namespace oracle
