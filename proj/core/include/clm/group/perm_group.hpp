#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace clm::group {

// Permutations of {0..n-1} as image arrays; product p*q means "p, then q".
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t degree);
Perm perm_then(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
bool perm_is_identity(const Perm& p);

// Orbit of a point, in discovery order.
std::vector<std::uint32_t> orbit_of(std::uint32_t point, std::span<const Perm> generators, std::size_t degree);

// Base and strong generating set built by randomized Schreier-Sims. The group
// order must be known in advance; it is the stopping rule, so a wrong value
// either throws or never terminates within the sift budget (throws then too).
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::uint64_t order,
            std::span<const std::uint32_t> base_prefix = {}, std::uint64_t seed = 0x5eed);

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return order_; }
  std::size_t levels() const noexcept { return levels_.size(); }
  std::uint32_t base_point(std::size_t level) const { return levels_[level].point; }
  const std::vector<std::uint32_t>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }
  // Generators of the pointwise stabilizer of base points 0..level-1.
  // level == levels() gives the trivial group (empty list).
  std::vector<Perm> stabilizer_generators(std::size_t level) const;
  bool contains(const Perm& p) const;

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<Perm> gens;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> slot;  // point -> index into transversal, -1 if outside orbit
    std::vector<Perm> transversal;    // maps `point` to orbit[i]
  };
  void rebuild(std::size_t level);
  // Returns the residue and the level where sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm g) const;
  std::uint64_t current_order() const;

  std::size_t degree_;
  std::uint64_t order_;
  std::vector<Level> levels_;
};

}  // namespace clm::group
