#include "clm/group/invariants.hpp"

#include <map>

#include "clm/group/automorphisms.hpp"

namespace clm::group {

GroupFingerprint fingerprint(const CayleyGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  std::map<std::uint32_t, std::size_t> profile;
  for (Element x = 0; x < g.order(); ++x) ++profile[g.element_order(x)];
  f.order_profile.assign(profile.begin(), profile.end());
  f.center_order = g.center().size();

  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  auto current = g.derived_subgroup(all);
  f.abelianization_order = g.order() / current.size();
  f.derived_length = 1;
  std::size_t prev = g.order();
  while (current.size() > 1) {
    if (current.size() == prev) {
      f.derived_length = -1;
      break;
    }
    prev = current.size();
    current = g.derived_subgroup(current);
    ++f.derived_length;
  }
  if (g.order() == 1) f.derived_length = 0;

  std::vector<char> seen(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++f.class_count;
    for (Element y = 0; y < g.order(); ++y) seen[g.conjugate(y, x)] = 1;
  }
  return f;
}

bool are_isomorphic(const CayleyGroup& g, const CayleyGroup& h) {
  if (g.order() != h.order()) return false;
  if (g.order() <= kFullIsomorphismLimit) return !find_isomorphism(g, h).empty();
  return fingerprint(g) == fingerprint(h);
}

}  // namespace clm::group
