#include "clm/group/cayley_group.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>

#include "clm/error.hpp"

namespace clm::group {

CayleyGroup::CayleyGroup(std::size_t order, std::vector<Element> table, std::vector<Element> generators,
                         std::string label, Validation validation)
    : order_(order), table_(std::move(table)), generators_(std::move(generators)), label_(std::move(label)) {
  const std::size_t n = order_;
  if (n == 0) throw InvariantViolation("group of order 0");
  if (table_.size() != n * n) throw InvariantViolation("table size does not match the order");
  for (Element e : table_) {
    if (e >= n) throw InvariantViolation("table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a] != a || table_[a * n] != a) throw InvariantViolation("element 0 is not a two-sided identity");
  }
  // Every row and column must be a permutation (Latin square).
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t tick = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++tick;
    for (std::size_t b = 0; b < n; ++b) {
      Element v = table_[a * n + b];
      if (stamp[v] == tick) throw InvariantViolation("a table row repeats an element");
      stamp[v] = tick;
    }
    ++tick;
    for (std::size_t b = 0; b < n; ++b) {
      Element v = table_[b * n + a];
      if (stamp[v] == tick) throw InvariantViolation("a table column repeats an element");
      stamp[v] = tick;
    }
  }
  inverses_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a * n + b] == 0) {
        inverses_[a] = static_cast<Element>(b);
        break;
      }
    }
    if (table_[inverses_[a] * n + a] != 0) throw InvariantViolation("left and right inverses differ");
  }
  if (validation == Validation::full) {
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      return mul(mul(static_cast<Element>(a), static_cast<Element>(b)), static_cast<Element>(c)) ==
             mul(static_cast<Element>(a), mul(static_cast<Element>(b), static_cast<Element>(c)));
    };
    if (n <= 256) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (!assoc(a, b, c)) throw InvariantViolation("table is not associative");
    } else {
      std::mt19937_64 rng(0x5eed5eedULL ^ n);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int i = 0; i < 100000; ++i) {
        if (!assoc(pick(rng), pick(rng), pick(rng))) throw InvariantViolation("table is not associative");
      }
    }
  }
  orders_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    Element x = static_cast<Element>(a);
    std::uint32_t k = 1;
    while (x != 0) {
      x = mul(x, static_cast<Element>(a));
      ++k;
    }
    orders_[a] = k;
  }
  for (Element g : generators_) {
    if (g >= n) throw InvariantViolation("generator index out of range");
  }
  if (!generates(generators_)) throw InvariantViolation("designated generators do not generate the group");
}

Element CayleyGroup::power(Element a, std::int64_t k) const {
  const std::int64_t m = orders_[a];
  k %= m;
  if (k < 0) k += m;
  Element r = identity();
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<Element> CayleyGroup::subgroup(std::span<const Element> gens) const {
  SubgroupBuilder b(*this);
  for (Element g : gens) b.add(g);
  std::vector<Element> out = b.elements();
  std::sort(out.begin(), out.end());
  return out;
}

bool CayleyGroup::generates(std::span<const Element> gens) const {
  SubgroupBuilder b(*this);
  for (Element g : gens) {
    b.add(g);
    if (b.size() == order_) return true;
  }
  return b.size() == order_;
}

bool CayleyGroup::is_subgroup(std::span<const Element> elements) const {
  std::vector<char> in(order_, 0);
  for (Element e : elements) {
    if (e >= order_) return false;
    in[e] = 1;
  }
  if (!in[0]) return false;
  for (Element a : elements) {
    for (Element b : elements) {
      if (!in[mul(a, b)]) return false;
    }
  }
  return true;
}

std::vector<Element> CayleyGroup::center() const {
  std::vector<Element> out;
  for (std::size_t a = 0; a < order_; ++a) {
    const auto x = static_cast<Element>(a);
    bool central = true;
    for (Element g : generators_) {
      if (mul(x, g) != mul(g, x)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<Element> CayleyGroup::derived_subgroup(std::span<const Element> of) const {
  SubgroupBuilder b(*this);
  for (Element x : of) {
    for (Element y : of) {
      b.add(mul(mul(inverses_[x], inverses_[y]), mul(x, y)));
    }
  }
  std::vector<Element> out = b.elements();
  std::sort(out.begin(), out.end());
  return out;
}

bool CayleyGroup::is_abelian() const {
  for (Element g : generators_) {
    for (Element h : generators_) {
      if (mul(g, h) != mul(h, g)) return false;
    }
  }
  return true;
}

std::vector<Element> CayleyGroup::involutions() const {
  std::vector<Element> out;
  for (std::size_t a = 1; a < order_; ++a) {
    if (orders_[a] == 2) out.push_back(static_cast<Element>(a));
  }
  return out;
}

SubgroupBuilder::SubgroupBuilder(const CayleyGroup& g) : g_(&g), member_(g.order(), 0) {
  member_[0] = 1;
  elements_.push_back(0);
}

bool SubgroupBuilder::add(Element x) {
  if (member_[x]) return false;
  gens_.push_back(x);
  // Close under right multiplication by every generator. Old elements times
  // old generators are already inside, so only pairs involving new material
  // can produce anything; rescanning is simpler and cheap at these sizes.
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Element e = elements_[i];
    for (Element s : gens_) {
      const Element y = g_->mul(e, s);
      if (!member_[y]) {
        member_[y] = 1;
        elements_.push_back(y);
      }
    }
  }
  return true;
}

MatrixFp MatrixFp::identity(std::uint32_t dim, std::uint32_t p) {
  MatrixFp m{dim, p, std::vector<std::uint32_t>(static_cast<std::size_t>(dim) * dim, 0)};
  for (std::uint32_t i = 0; i < dim; ++i) m.entries[static_cast<std::size_t>(i) * dim + i] = 1 % p;
  return m;
}

MatrixFp MatrixFp::operator*(const MatrixFp& o) const {
  if (dim != o.dim || p != o.p) throw InvalidInput("matrix shapes or moduli differ");
  MatrixFp r{dim, p, std::vector<std::uint32_t>(entries.size(), 0)};
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = 0; j < dim; ++j) {
      std::uint64_t acc = 0;
      for (std::uint32_t k = 0; k < dim; ++k) acc += static_cast<std::uint64_t>(at(i, k)) * o.at(k, j);
      r.entries[static_cast<std::size_t>(i) * dim + j] = static_cast<std::uint32_t>(acc % p);
    }
  }
  return r;
}

std::uint32_t MatrixFp::determinant() const {
  std::vector<std::int64_t> a(entries.begin(), entries.end());
  const std::int64_t mod = p;
  auto powmod = [mod](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= mod;
    while (e > 0) {
      if (e & 1) r = r * b % mod;
      b = b * b % mod;
      e >>= 1;
    }
    return r;
  };
  std::int64_t det = 1;
  for (std::uint32_t c = 0; c < dim; ++c) {
    std::uint32_t piv = c;
    while (piv < dim && a[static_cast<std::size_t>(piv) * dim + c] == 0) ++piv;
    if (piv == dim) return 0;
    if (piv != c) {
      for (std::uint32_t k = 0; k < dim; ++k) std::swap(a[static_cast<std::size_t>(piv) * dim + k], a[static_cast<std::size_t>(c) * dim + k]);
      det = (mod - det) % mod;
    }
    const std::int64_t pv = a[static_cast<std::size_t>(c) * dim + c];
    det = det * pv % mod;
    const std::int64_t inv = powmod(pv, mod - 2);
    for (std::uint32_t r = c + 1; r < dim; ++r) {
      const std::int64_t f = a[static_cast<std::size_t>(r) * dim + c] * inv % mod;
      if (f == 0) continue;
      for (std::uint32_t k = c; k < dim; ++k) {
        auto& cell = a[static_cast<std::size_t>(r) * dim + k];
        cell = ((cell - f * a[static_cast<std::size_t>(c) * dim + k]) % mod + mod) % mod;
      }
    }
  }
  return static_cast<std::uint32_t>(det);
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Breadth-first closure. Element i > 0 is elements[parent[i]] * gens[via[i]],
// which lets the full table be filled from the right-multiplication table.
template <class T, class Key, class Compose>
std::pair<CayleyGroup, std::vector<T>> close_under(const std::vector<T>& gens, T identity, Key key, Compose compose,
                                                   std::size_t cap, std::string label) {
  std::vector<T> elements{identity};
  std::unordered_map<std::vector<std::uint32_t>, Element, VectorHash> index;
  index.emplace(key(identity), 0);
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  const std::size_t k = gens.size();
  std::vector<Element> right;  // right[i * k + j] = elements[i] * gens[j]
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      T y = compose(elements[i], gens[j]);
      auto [it, fresh] = index.emplace(key(y), static_cast<Element>(elements.size()));
      if (fresh) {
        if (elements.size() >= cap) {
          throw CapExceeded("order cap: closure of '" + label + "' exceeds " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(y));
        parent.push_back(static_cast<Element>(i));
        via.push_back(static_cast<std::uint32_t>(j));
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const Element ap = table[a * n + parent[b]];
      table[a * n + b] = right[static_cast<std::size_t>(ap) * k + via[b]];
    }
  }
  std::vector<Element> gen_idx;
  for (const T& g : gens) {
    const Element e = index.at(key(g));
    if (e != 0 && std::find(gen_idx.begin(), gen_idx.end(), e) == gen_idx.end()) gen_idx.push_back(e);
  }
  CayleyGroup group(n, std::move(table), std::move(gen_idx), std::move(label), Validation::structural);
  return {std::move(group), std::move(elements)};
}

}  // namespace

CayleyGroup group_from_generators(std::span<const Permutation> generators, std::string label, std::size_t cap) {
  if (generators.empty()) throw InvalidInput("no generators given");
  const std::size_t degree = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree) throw InvalidInput("generators act on sets of different sizes");
    std::vector<char> hit(degree, 0);
    for (std::uint32_t x : g) {
      if (x >= degree || hit[x]) throw InvalidInput("generator is not a permutation");
      hit[x] = 1;
    }
  }
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> gens(generators.begin(), generators.end());
  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
  };
  auto key = [](const Permutation& p) -> const Permutation& { return p; };
  return close_under(gens, id, key, compose, cap, std::move(label)).first;
}

MatrixGroup matrix_group_from_generators(std::span<const MatrixFp> generators, std::string label, std::size_t cap) {
  if (generators.empty()) throw InvalidInput("no generators given");
  const auto dim = generators.front().dim;
  const auto p = generators.front().p;
  for (const auto& g : generators) {
    if (g.dim != dim || g.p != p || g.entries.size() != static_cast<std::size_t>(dim) * dim) {
      throw InvalidInput("matrix generators differ in shape or modulus");
    }
    if (g.determinant() == 0) throw InvalidInput("matrix generator is not invertible");
  }
  std::vector<MatrixFp> gens(generators.begin(), generators.end());
  auto compose = [](const MatrixFp& a, const MatrixFp& b) { return a * b; };
  auto key = [](const MatrixFp& m) -> const std::vector<std::uint32_t>& { return m.entries; };
  auto [group, mats] = close_under(gens, MatrixFp::identity(dim, p), key, compose, cap, std::move(label));
  return MatrixGroup{std::move(group), std::move(mats)};
}

CayleyGroup group_from_generators(std::span<const MatrixFp> generators, std::string label, std::size_t cap) {
  return matrix_group_from_generators(generators, std::move(label), cap).group;
}

CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element first = a.mul(static_cast<Element>(x % na), static_cast<Element>(y % na));
      const Element second = b.mul(static_cast<Element>(x / na), static_cast<Element>(y / na));
      table[x * n + y] = static_cast<Element>(first + second * na);
    }
  }
  std::vector<Element> gens;
  for (Element g : a.generators()) gens.push_back(g);
  for (Element h : b.generators()) gens.push_back(static_cast<Element>(h * na));
  return CayleyGroup(n, std::move(table), std::move(gens), a.label() + "x" + b.label(), Validation::structural);
}

}  // namespace clm::group
