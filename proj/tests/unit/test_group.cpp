#include <doctest.h>

#include <map>
#include <numeric>

#include "clm/error.hpp"
#include "clm/group/automorphisms.hpp"
#include "clm/group/gi.hpp"
#include "clm/group/invariants.hpp"
#include "clm/group/perm_group.hpp"
#include "clm/group/standard_groups.hpp"
#include "../oracles/groups.hpp"
#include "../support/suites.hpp"

using namespace clm;
using namespace clm::group;
using suites::abelian_types;
using suites::small_suite;

namespace {

std::vector<Element> coset0(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), Element{0});
  return v;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("group_from_generators builds closures and enforces caps") {
  const std::vector<Permutation> a4{{1, 2, 0, 3}, {0, 2, 3, 1}};
  auto g = group_from_generators(a4, "a4");
  CHECK(g.order() == 12);
  CHECK(g.generators().size() == 2);
  const std::vector<Permutation> tr{{1, 0, 2}};
  CHECK(group_from_generators(tr, "c2").order() == 2);
  const std::vector<Permutation> s6{{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}};
  CHECK_THROWS_AS(group_from_generators(s6, "s6", 100), CapExceeded);
  const std::vector<MatrixFp> singular{MatrixFp{2, 3, {1, 1, 1, 1}}};
  CHECK_THROWS_AS(group_from_generators(singular, "bad"), InvalidInput);
}

TEST_CASE("standard groups") {
  auto c7 = standard_group(Preset::cyclic, 7);
  CHECK(c7.order() == 7);
  auto q8 = standard_group(Preset::quaternion, 8);
  CHECK(q8.order() == 8);
  CHECK(q8.involutions().size() == 1);
  CHECK(q8.center().size() == 2);
  auto d4 = standard_group(Preset::dihedral, 8);
  CHECK(d4.order() == 8);
  CHECK(d4.involutions().size() == 5);
  CHECK(standard_group(Preset::symmetric, 4).order() == 24);
  CHECK(standard_group(Preset::alternating, 5).order() == 60);
  CHECK(standard_group(Preset::abelian_product, 3).order() == 8);
  CHECK_THROWS_AS(group_from_name("z9"), InvalidInput);
}

TEST_CASE("cayley table validation rejects broken tables") {
  // Row 1 of this order-2 table repeats an entry.
  CHECK_THROWS_AS(CayleyGroup(2, {0, 1, 1, 1}, {1}, "bad"), InvariantViolation);
  CHECK_THROWS_AS(CayleyGroup(2, {0, 1, 1, 0}, {}, "nogens"), InvariantViolation);
}

TEST_CASE("Schreier-Sims recovers orders and stabilizers") {
  const std::vector<Perm> s5{{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}};
  PermGroup g(5, s5, 120);
  CHECK(g.contains({1, 0, 2, 3, 4}));
  const std::uint32_t prefix[] = {0};
  PermGroup h(5, s5, 120, prefix);
  CHECK(h.basic_orbit(0).size() == 5);
  PermGroup stab(5, h.stabilizer_generators(1), 24);
  CHECK(stab.order() == 24);
  CHECK_THROWS_AS(PermGroup(5, s5, 7), InvariantViolation);
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(standard_group(Preset::cyclic, 5)).order == 4);
  CHECK(automorphism_group(group_from_name("c2xc2")).order == 6);
  CHECK(automorphism_group(group_from_name("q8")).order == 24);
  CHECK(automorphism_group(group_from_name("d8")).order == 8);
  CHECK(automorphism_group(group_from_name("a5")).order == 120);
  CHECK(automorphism_group(group_from_name("s4")).order == 24);
  CHECK(automorphism_group(group_from_name("c2xc2xc2xc2")).order == 20160);
  CHECK(automorphism_group(group_from_name("s6"), SearchLimits{720, 2000, 1000}).order == 1440);
  CHECK_THROWS_AS(automorphism_group(group_from_name("s6"), SearchLimits{100, 1000, 1000}), CapExceeded);
}

TEST_CASE("automorphism orders match the brute-force oracle up to order 8") {
  for (const char* name : {"c2", "c3", "c4", "c2xc2", "c5", "c6", "s3", "c7", "c8", "c2xc4", "c2xc2xc2", "d8", "q8"}) {
    auto g = group_from_name(name);
    CAPTURE(name);
    const auto brute = oracle::all_automorphisms(g);
    const auto part = automorphisms(g);
    CHECK(part.automorphisms.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i)
      CHECK(std::vector<Element>(part.automorphisms[i].image().begin(), part.automorphisms[i].image().end()) ==
            brute[i]);
    CHECK(gi_extension_count(g).gi_extension_count == oracle::gi_count(g));
  }
}

TEST_CASE("Q8 outer automorphisms and the Out-class partition") {
  auto q8 = group_from_name("q8");
  const auto part = automorphisms(q8);
  CHECK(part.automorphisms.size() == 24);
  CHECK(part.inner.size() == 4);
  CHECK(part.cosets.size() == 6);
  std::size_t covered = 0;
  for (const auto& cls : part.out_classes) covered += cls.size();
  CHECK(covered == 6);
  // Out(Q8) = S3 has three conjugacy classes.
  CHECK(part.out_classes.size() == 3);
}

TEST_CASE("Out-class partition properties on the suite") {
  for (const auto& g : small_suite()) {
    CAPTURE(g.label());
    if (automorphism_group(g).order > SearchLimits{}.max_enumerated) {
      CHECK_THROWS_AS(automorphisms(g), CapExceeded);
      continue;
    }
    const auto part = automorphisms(g);
    CHECK(part.inner.size() * part.center_order == g.order());
    CHECK(part.automorphisms.size() % part.inner.size() == 0);
    std::vector<int> hits(part.cosets.size(), 0);
    for (const auto& cls : part.out_classes)
      for (auto c : cls) ++hits[c];
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(part.automorphisms.front().is_identity());
    // Conjugating a coset member by any automorphism stays in the same class.
    std::map<std::vector<Element>, std::size_t> class_of;
    for (std::size_t k = 0; k < part.out_classes.size(); ++k)
      for (auto c : part.out_classes[k])
        for (auto i : part.cosets[c]) {
          auto img = part.automorphisms[i].image();
          class_of[std::vector<Element>(img.begin(), img.end())] = k;
        }
    for (std::size_t k = 0; k < part.out_classes.size(); ++k) {
      const auto& s = part.automorphisms[part.cosets[part.out_classes[k].front()].front()];
      for (std::size_t t = 0; t < part.automorphisms.size(); t += 1 + part.automorphisms.size() / 16) {
        const auto& tau = part.automorphisms[t];
        const auto conj = compose_maps(tau.image(), compose_maps(s.image(), inverse_map(tau.image())));
        CHECK(class_of.at(conj) == k);
      }
    }
    CHECK(gi_extension_count(g).gi_extension_count == gi_extension_count_enumerated(g, part));
  }
}

TEST_CASE("GI automorphism predicate") {
  auto c3 = standard_group(Preset::cyclic, 3);
  std::vector<Element> inversion(3);
  for (Element x = 0; x < 3; ++x) inversion[x] = c3.inv(x);
  CHECK(is_gi_automorphism(c3, Automorphism::checked(c3, inversion)));
  CHECK_FALSE(is_gi_automorphism(c3, Automorphism::checked(c3, coset0(3))));
  auto q8 = group_from_name("q8");
  CHECK_FALSE(is_gi_automorphism(q8, Automorphism::checked(q8, coset0(8))));
  CHECK_THROWS_AS(Automorphism::checked(c3, {0, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(Automorphism::checked(c3, {1, 0, 2}), InvalidInput);
}

TEST_CASE("GI extension counts") {
  CHECK(gi_extension_count(group_from_name("q8")).gi_extension_count == 1);
  CHECK(gi_extension_count(group_from_name("d8")).gi_extension_count == 1);
  const auto a5 = gi_extension_count(group_from_name("a5"));
  CHECK(a5.gi_extension_count >= 2);
  CHECK(a5.distinct_extension_fingerprints >= 2);
  CHECK(a5.generated_by_involutions);
  CHECK(a5.aut_order == 120);
  CHECK(a5.out_order == 2);
  for (const char* name : {"c12", "c2xc2xc2xc2xc2xc2", "c4xc4xc4", "c8xc8", "c2xc2xc4xc4"}) {
    CAPTURE(name);
    const auto r = gi_extension_count(group_from_name(name, 100000));
    CHECK(r.gi_extension_count == 1);
    CHECK(r.has_gi);
  }
  CHECK(gi_extension_count(group_from_name("c2xc2xc2xc2xc2xc2xc2", 100000)).gi_extension_count == 1);
}

TEST_CASE("every abelian group of order at most 64 has exactly one GI-extension") {
  std::size_t groups = 0;
  for (int n = 1; n <= 64; ++n) {
    for (const auto& type : abelian_types(n)) {
      auto g = abelian_group(type);
      CAPTURE(g.label());
      const auto r = gi_extension_count(g);
      CHECK(r.gi_extension_count == 1);
      CHECK(r.has_gi);
      ++groups;
    }
  }
  CHECK(groups == 117);
}

TEST_CASE("semidirect products") {
  auto c3 = standard_group(Preset::cyclic, 3);
  std::vector<Element> inversion(3);
  for (Element x = 0; x < 3; ++x) inversion[x] = c3.inv(x);
  auto s3 = build_semidirect_c2(c3, Automorphism::checked(c3, inversion));
  CHECK(s3.order() == 6);
  CHECK(s3.involutions().size() == 3);
  CHECK(are_isomorphic(s3, group_from_name("s3")));

  auto q8 = group_from_name("q8");
  auto q8c2 = build_semidirect_c2(q8, Automorphism::checked(q8, coset0(8)));
  CHECK(are_isomorphic(q8c2, direct_product(q8, standard_group(Preset::cyclic, 2))));
  CHECK_FALSE(is_gi_extension_direct(q8c2, coset0(8)));

  // A4 twisted by conjugation with a transposition of S4.
  const std::vector<Permutation> s4gens{{1, 2, 0, 3}, {0, 2, 3, 1}, {1, 0, 2, 3}};
  auto s4m = group_from_generators(std::span(s4gens), "s4");
  auto a4 = group_from_name("a4");
  const auto part = automorphisms(a4);
  bool found_s4 = false;
  for (const auto& s : part.automorphisms) {
    if (!s.is_involution() || s.is_identity()) continue;
    const bool inner = std::any_of(part.inner.begin(), part.inner.end(),
                                   [&](std::size_t i) { return part.automorphisms[i] == s; });
    if (inner) continue;
    auto ext = build_semidirect_c2(a4, s);
    const auto f = fingerprint(ext);
    if (f == fingerprint(s4m)) found_s4 = true;
  }
  CHECK(found_s4);
  const auto f = fingerprint(s4m);
  CHECK(f.order == 24);
  CHECK(f.center_order == 1);
  CHECK(f.abelianization_order == 2);

  auto c4 = standard_group(Preset::cyclic, 4);
  CHECK_FALSE(is_gi_extension_direct(c4, std::vector<Element>{0, c4.power(c4.generators()[0], 2)}));
  CHECK_THROWS_AS(is_gi_extension_direct(c4, std::vector<Element>{0}), InvalidInput);
  // x -> x^2 on C5 has order 4.
  auto c5 = standard_group(Preset::cyclic, 5);
  std::vector<Element> squaring(5);
  for (Element x = 0; x < 5; ++x) squaring[x] = c5.mul(x, x);
  CHECK_THROWS_AS(build_semidirect_c2(c5, Automorphism::checked(c5, squaring)), InvalidInput);
}

TEST_CASE("S_n over A_n is a GI-extension for n = 3..6") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    auto sn = standard_group(Preset::symmetric, n);
    // the even permutations are the derived subgroup
    const auto even = sn.derived_subgroup(coset0(sn.order()));
    CHECK(even.size() * 2 == sn.order());
    CHECK(is_gi_extension_direct(sn, even));
  }
}

TEST_CASE("generated by involutions") {
  CHECK(is_generated_by_involutions(group_from_name("s3")));
  CHECK_FALSE(is_generated_by_involutions(group_from_name("q8")));
  CHECK(is_generated_by_involutions(group_from_name("a5")));
  // G x C2 over G is GI iff G is generated by involutions.
  for (const auto& g : small_suite()) {
    CAPTURE(g.label());
    auto ext = build_semidirect_c2(g, Automorphism::trusted(g, coset0(g.order())));
    CHECK(is_gi_extension_direct(ext, coset0(g.order())) == is_generated_by_involutions(g));
    const auto r = gi_extension_count(g);
    if (r.generated_by_involutions) CHECK(r.has_gi);
    CHECK(r.has_gi == (r.gi_extension_count >= 1));
  }
}

TEST_CASE("inverted-set criterion agrees with the direct check on every involution") {
  std::size_t checked = 0;
  for (const auto& g : small_suite()) {
    CAPTURE(g.label());
    for (const auto& s : involutive_automorphisms(g)) {
      const auto ext = build_semidirect_c2(g, s);
      CHECK(is_gi_automorphism(g, s) == is_gi_extension_direct(ext, coset0(g.order())));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("isomorphic extensions from conjugate Out-classes") {
  for (const auto& g : small_suite()) {
    if (g.order() > 24) continue;
    CAPTURE(g.label());
    const auto part = automorphisms(g);
    for (const auto& cls : part.out_classes) {
      std::vector<GroupFingerprint> fps;
      for (auto c : cls)
        for (auto i : part.cosets[c])
          if (is_gi_automorphism(g, part.automorphisms[i]))
            fps.push_back(fingerprint(build_semidirect_c2(g, part.automorphisms[i])));
      for (const auto& f : fps) CHECK(f == fps.front());
    }
  }
}

TEST_CASE("isomorphism search") {
  CHECK(are_isomorphic(group_from_name("d8"), group_from_generators(
                                                  std::vector<Permutation>{{1, 2, 3, 0}, {3, 2, 1, 0}}, "sq")));
  CHECK_FALSE(are_isomorphic(group_from_name("d8"), group_from_name("q8")));
  CHECK_FALSE(are_isomorphic(group_from_name("c2xc4"), group_from_name("c8")));
  CHECK(are_isomorphic(group_from_name("c6"), group_from_name("c2xc3")));
  CHECK(fingerprint(group_from_name("a5")).derived_length == -1);
  CHECK(fingerprint(group_from_name("s4")).derived_length == 3);
}

}  // TEST_SUITE
