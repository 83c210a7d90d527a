#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clm/group/cayley_group.hpp"

namespace clm::group::detail {

inline constexpr Element kUnset = 0xffffffffU;

// Extends gens[i] -> imgs[i] to an injective homomorphism on <gens> by walking
// the Cayley graph; any conflicting edge or repeated image rejects.
class PartialHom {
 public:
  PartialHom(const CayleyGroup& src, const CayleyGroup& dst)
      : src_(&src), dst_(&dst), map_(src.order(), kUnset), used_(dst.order(), 0) {}

  bool assign(std::span<const Element> gens, std::span<const Element> imgs) {
    clear();
    set(0, 0);
    for (std::size_t q = 0; q < domain_.size(); ++q) {
      const Element x = domain_[q];
      const Element fx = map_[x];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Element y = src_->mul(x, gens[i]);
        const Element fy = dst_->mul(fx, imgs[i]);
        if (map_[y] == kUnset) {
          if (used_[fy]) return false;
          set(y, fy);
        } else if (map_[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  Element operator()(Element x) const { return map_[x]; }
  bool defined(Element x) const { return map_[x] != kUnset; }
  const std::vector<Element>& domain() const noexcept { return domain_; }
  bool total() const noexcept { return domain_.size() == src_->order(); }
  const std::vector<Element>& map() const noexcept { return map_; }

 private:
  void set(Element x, Element fx) {
    map_[x] = fx;
    used_[fx] = 1;
    domain_.push_back(x);
  }
  void clear() {
    for (auto x : domain_) {
      used_[map_[x]] = 0;
      map_[x] = kUnset;
    }
    domain_.clear();
  }

  const CayleyGroup* src_;
  const CayleyGroup* dst_;
  std::vector<Element> map_;
  std::vector<char> used_;
  std::vector<Element> domain_;
};

// Isomorphism-invariant label per element: order, conjugacy class size and
// number of square roots, packed.
std::vector<std::uint64_t> element_types(const CayleyGroup& g);

// Short generating tuple: greedily add the element that enlarges the
// subgroup the most (least index on ties).
std::vector<Element> generating_tuple(const CayleyGroup& g);

std::vector<Element> conjugacy_class_sizes(const CayleyGroup& g);

}  // namespace clm::group::detail
