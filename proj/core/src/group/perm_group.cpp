#include "clm/group/perm_group.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "clm/error.hpp"

namespace clm::group {

Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

Perm perm_then(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::vector<std::uint32_t> orbit_of(std::uint32_t point, std::span<const Perm> generators, std::size_t degree) {
  std::vector<char> seen(degree, 0);
  std::vector<std::uint32_t> orbit{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& s : generators) {
      const auto y = s[orbit[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::uint64_t order,
                     std::span<const std::uint32_t> base_prefix, std::uint64_t seed)
    : degree_(degree), order_(order) {
  if (order == 0) throw InvalidInput("PermGroup: order must be positive");
  std::erase_if(generators, [](const Perm& p) { return perm_is_identity(p); });
  for (const auto& g : generators)
    if (g.size() != degree) throw InvalidInput("PermGroup: generator degree mismatch");
  for (auto b : base_prefix) {
    if (b >= degree) throw InvalidInput("PermGroup: base point out of range");
    levels_.push_back(Level{b, {}, {}, {}, {}});
  }
  if (levels_.empty() && !generators.empty()) {
    const auto& g = generators.front();
    std::uint32_t moved = 0;
    while (g[moved] == moved) ++moved;
    levels_.push_back(Level{moved, {}, {}, {}, {}});
  }
  if (!levels_.empty()) levels_[0].gens = generators;
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild(l);
  if (generators.empty()) {
    if (order != 1) throw InvariantViolation("PermGroup: no generators but order " + std::to_string(order));
    return;
  }

  // Product replacement for random elements.
  std::mt19937_64 rng(seed);
  std::vector<Perm> pool = generators;
  while (pool.size() < 10) pool.push_back(generators[pool.size() % generators.size()]);
  Perm acc = perm_identity(degree);
  auto next_random = [&]() {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    if (rng() & 1U)
      pool[i] = perm_then(pool[i], pool[j]);
    else
      pool[i] = perm_then(pool[j], pool[i]);
    acc = perm_then(acc, pool[i]);
    return acc;
  };
  for (int i = 0; i < 50; ++i) next_random();

  constexpr int kStallLimit = 20000;
  int stall = 0;
  while (current_order() < order_) {
    auto [h, stop] = sift(next_random());
    if (perm_is_identity(h)) {
      if (++stall > kStallLimit)
        throw InvariantViolation("PermGroup: stalled at order " + std::to_string(current_order()) + " of " +
                                 std::to_string(order_));
      continue;
    }
    stall = 0;
    if (stop == levels_.size()) {
      std::uint32_t moved = 0;
      while (h[moved] == moved) ++moved;
      levels_.push_back(Level{moved, {}, {}, {}, {}});
    }
    for (std::size_t l = 1; l <= stop; ++l) levels_[l].gens.push_back(h);
    for (std::size_t l = 1; l <= stop; ++l) rebuild(l);
  }
  if (current_order() != order_)
    throw InvariantViolation("PermGroup: generated order exceeds the stated " + std::to_string(order_));
}

void PermGroup::rebuild(std::size_t level) {
  auto& L = levels_[level];
  L.orbit.assign(1, L.point);
  L.slot.assign(degree_, -1);
  L.transversal.assign(1, perm_identity(degree_));
  L.slot[L.point] = 0;
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    for (const auto& s : L.gens) {
      const auto y = s[L.orbit[i]];
      if (L.slot[y] < 0) {
        L.slot[y] = static_cast<std::int32_t>(L.orbit.size());
        L.orbit.push_back(y);
        L.transversal.push_back(perm_then(L.transversal[i], s));
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g) const {
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const auto& L = levels_[l];
    const auto beta = g[L.point];
    if (L.slot[beta] < 0) return {std::move(g), l};
    g = perm_then(g, perm_inverse(L.transversal[static_cast<std::size_t>(L.slot[beta])]));
  }
  return {std::move(g), levels_.size()};
}

std::uint64_t PermGroup::current_order() const {
  std::uint64_t n = 1;
  for (const auto& L : levels_) {
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(L.orbit.size()), &n))
      throw CapExceeded("PermGroup: order overflows 64 bits");
  }
  return n;
}

std::vector<Perm> PermGroup::stabilizer_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].gens;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  return perm_is_identity(sift(p).first);
}

}  // namespace clm::group
