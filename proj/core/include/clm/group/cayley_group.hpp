#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace clm::group {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultCayleyCap = 2000;

// How much of the group axioms to re-verify when adopting a table. `full`
// includes associativity (exhaustive up to order 256, 10^5 sampled triples
// beyond). `structural` skips associativity and is meant for tables produced
// by constructions that are associative by design.
enum class Validation { full, structural };

// Finite group given by its multiplication table; element 0 is the identity.
// Immutable after construction.
class CayleyGroup {
 public:
  CayleyGroup(std::size_t order, std::vector<Element> table, std::vector<Element> generators, std::string label,
              Validation validation = Validation::full);

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverses_[a]; }
  std::uint32_t element_order(Element a) const { return orders_[a]; }
  Element power(Element a, std::int64_t k) const;
  // g x g^-1
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inverses_[g]); }

  std::span<const Element> generators() const noexcept { return generators_; }
  const std::string& label() const noexcept { return label_; }
  std::span<const Element> table() const noexcept { return table_; }

  // Sorted element list of the subgroup generated by gens.
  std::vector<Element> subgroup(std::span<const Element> gens) const;
  bool generates(std::span<const Element> gens) const;
  bool is_subgroup(std::span<const Element> elements) const;
  std::vector<Element> center() const;
  std::vector<Element> derived_subgroup(std::span<const Element> of) const;
  bool is_abelian() const;
  std::vector<Element> involutions() const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::uint32_t> orders_;
  std::vector<Element> generators_;
  std::string label_;
};

// Incremental subgroup closure: adding an element already inside is O(1).
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const CayleyGroup& g);
  // Returns true if x enlarged the subgroup.
  bool add(Element x);
  bool contains(Element x) const { return member_[x] != 0; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }

 private:
  const CayleyGroup* g_;
  std::vector<char> member_;
  std::vector<Element> elements_;
  std::vector<Element> gens_;
};

using Permutation = std::vector<std::uint32_t>;

// Square matrix over F_p, row-major, acting on column vectors.
struct MatrixFp {
  std::uint32_t dim = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> entries;

  std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }
  static MatrixFp identity(std::uint32_t dim, std::uint32_t p);
  MatrixFp operator*(const MatrixFp& o) const;
  bool operator==(const MatrixFp&) const = default;
  std::uint32_t determinant() const;
};

// Closure of generator maps under composition; the product a*b is the map
// "b first, then a". Generators become the group's designated generators.
CayleyGroup group_from_generators(std::span<const Permutation> generators, std::string label,
                                  std::size_t cap = kDefaultCayleyCap);
CayleyGroup group_from_generators(std::span<const MatrixFp> generators, std::string label,
                                  std::size_t cap = kDefaultCayleyCap);

// Same as above for matrices, also returning the matrix of every element.
struct MatrixGroup {
  CayleyGroup group;
  std::vector<MatrixFp> matrices;
};
MatrixGroup matrix_group_from_generators(std::span<const MatrixFp> generators, std::string label,
                                         std::size_t cap = kDefaultCayleyCap);

CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b);

}  // namespace clm::group
