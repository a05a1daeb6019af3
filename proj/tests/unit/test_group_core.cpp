#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "nabt/abelian.hpp"
#include "nabt/errors.hpp"
#include "nabt/groups.hpp"
#include "nabt/hom.hpp"
#include "nabt/presentation.hpp"
#include "nabt/subgroup.hpp"

using namespace nabt;

namespace {

Perm cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Perm::from_cycles(n, c); }

// Brute-force closure under products, independent of PermGroup.
std::set<Perm> brute_closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> all{Perm::identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(all.begin(), all.end());
    for (const auto& a : snapshot)
      for (const auto& b : gens)
        if (all.insert(a * b).second) grew = true;
  }
  return all;
}

// Normality of every term in G itself, not just in the previous term.
bool normal_in(const PermGroup& g, const Subgroup& s) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem n : s.elements())
      if (!s.contains(g.conjugate(x, n))) return false;
  return true;
}

std::vector<PermGroup> small_corpus() {
  return {groups::cyclic(1), groups::cyclic(2), groups::cyclic(4), groups::cyclic(6),
          groups::klein_four(), groups::by_name("C2xC4").value(), groups::symmetric(3),
          groups::dihedral(4), groups::quaternion(), groups::alternating(4), groups::dihedral(6),
          groups::by_name("C3xC3").value()};
}

}  // namespace

TEST_CASE("perm basics") {
  Perm p = cyc(4, {{0, 1, 2}});
  CHECK(p(0) == 1);
  CHECK(p.order() == 3);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.to_cycle_string() == "(0 1 2)");
  CHECK(Perm::identity(3).to_cycle_string() == "()");
  // left-to-right composition
  Perm a = cyc(3, {{0, 1}});
  Perm b = cyc(3, {{1, 2}});
  CHECK((a * b)(0) == b(a(0)));
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0}), InvalidArgument);
  CHECK_THROWS_AS(cyc(3, {{0, 3}}), InvalidArgument);
}

TEST_CASE("elements: canonical enumeration") {
  SUBCASE("single involution") {
    PermGroup g(2, {cyc(2, {{0, 1}})});
    REQUIRE(g.order() == 2);
    CHECK(g.element(0).is_identity());
    CHECK(g.element(1) == cyc(2, {{0, 1}}));
  }
  SUBCASE("S3 against all permutations of three points") {
    PermGroup g(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
    std::vector<Perm> oracle;
    std::vector<Point> pts{0, 1, 2};
    do oracle.emplace_back(pts);
    while (std::next_permutation(pts.begin(), pts.end()));
    std::vector<Perm> got(g.elements().begin(), g.elements().end());
    CHECK(got == oracle);  // lexicographic order as well
  }
  SUBCASE("trivial group") {
    PermGroup g = PermGroup::trivial(1);
    CHECK(g.order() == 1);
  }
  SUBCASE("bound exceeded") {
    PermGroup g(6, {cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3, 4, 5}})}, 100);
    CHECK_THROWS_AS(g.order(), BoundExceeded);
  }
  SUBCASE("closure and table agree with brute force on the corpus") {
    for (const auto& g : small_corpus()) {
      auto oracle = brute_closure(g.generators(), g.degree());
      CHECK(std::set<Perm>(g.elements().begin(), g.elements().end()) == oracle);
      for (Elem a = 0; a < g.order(); ++a) {
        CHECK(g.mul(a, g.inv(a)) == PermGroup::identity());
        for (Elem b = 0; b < g.order(); ++b) CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
      }
    }
  }
}

TEST_CASE("subgroup_generated and normal_closure") {
  PermGroup s3 = groups::symmetric(3);
  CHECK(subgroup_generated(s3, {}).is_trivial());
  Elem three[] = {s3.index_of(cyc(3, {{0, 1, 2}}))};
  CHECK(subgroup_generated(s3, three).order() == 3);
  std::vector<Elem> all(s3.order());
  std::iota(all.begin(), all.end(), 0);
  CHECK(subgroup_generated(s3, all).order() == 6);

  Elem t[] = {s3.index_of(cyc(3, {{0, 1}}))};
  CHECK(subgroup_generated(s3, t).order() == 2);
  CHECK(normal_closure(s3, t).order() == 6);
  CHECK(normal_closure(s3, {}).is_trivial());

  PermGroup c6 = groups::cyclic(6);
  for (Elem e = 0; e < c6.order(); ++e) {
    Elem one[] = {e};
    CHECK(normal_closure(c6, one) == subgroup_generated(c6, one));
  }
}

TEST_CASE("invariant: subgroups are closed and contained in their normal closure") {
  for (const auto& g : small_corpus()) {
    for (Elem e = 0; e < g.order(); ++e) {
      Elem one[] = {e};
      Subgroup s = subgroup_generated(g, one);
      CHECK(s.contains(PermGroup::identity()));
      for (Elem a : s.elements()) {
        CHECK(s.contains(g.inv(a)));
        for (Elem b : s.elements()) CHECK(s.contains(g.mul(a, b)));
      }
      CHECK(s.is_subset_of(normal_closure(g, one)));
      CHECK(s.as_group().order() == s.order());
    }
  }
}

TEST_CASE("center") {
  CHECK(center(groups::cyclic(6)).order() == 6);
  CHECK(center(groups::symmetric(3)).is_trivial());
  PermGroup q8 = groups::quaternion();
  // Oracle: count elements commuting with everything.
  std::size_t count = 0;
  for (Elem z = 0; z < q8.order(); ++z) {
    bool central = true;
    for (Elem g = 0; g < q8.order(); ++g) central = central && q8.mul(z, g) == q8.mul(g, z);
    count += central;
  }
  CHECK(count == 2);
  CHECK(center(q8).order() == 2);
}

TEST_CASE("commutator subgroups") {
  PermGroup s3 = groups::symmetric(3);
  CHECK(commutator_subgroup(s3).order() == 3);
  CHECK(commutator_subgroup(groups::klein_four()).is_trivial());
  PermGroup d4 = groups::dihedral(4);
  CHECK(commutator_subgroup(Subgroup::whole(d4), center(d4)).is_trivial());
  CHECK(commutator_subgroup(groups::alternating(4)).order() == 4);
}

TEST_CASE("quotient") {
  PermGroup q8 = groups::quaternion();
  auto [v, proj] = quotient(q8, center(q8));
  CHECK(v.order() == 4);
  for (Elem e = 1; e < v.order(); ++e) CHECK(v.element_order(e) == 2);
  CHECK(proj.kernel() == center(q8));

  auto [one, p1] = quotient(q8, Subgroup::whole(q8));
  CHECK(one.order() == 1);
  auto [same, p2] = quotient(q8, Subgroup::trivial(q8));
  CHECK(fingerprint(same) == fingerprint(q8));

  PermGroup s3 = groups::symmetric(3);
  Elem t[] = {s3.index_of(cyc(3, {{0, 1}}))};
  CHECK_THROWS_AS(quotient(s3, subgroup_generated(s3, t)), NotNormal);

  for (const auto& g : small_corpus())
    for (const auto& n : normal_subgroups(g)) CHECK(quotient(g, n).first.order() * n.order() == g.order());
}

TEST_CASE("abelian_invariants") {
  CHECK(abelian_invariants(groups::symmetric(3)) == AbelianInvariants{{2}, 0});
  CHECK(abelian_invariants(groups::cyclic(6)) == AbelianInvariants{{6}, 0});
  CHECK(abelian_invariants(groups::quaternion()) == AbelianInvariants{{2, 2}, 0});
  CHECK(abelian_invariants(groups::by_name("C2xC4").value()) == AbelianInvariants{{2, 4}, 0});
  CHECK(abelian_invariants(groups::alternating(4)) == AbelianInvariants{{3}, 0});
  CHECK(abelian_invariants(groups::by_name("C2xC3").value()) == AbelianInvariants{{6}, 0});
  CHECK(abelian_invariants(PermGroup::trivial()).is_trivial());
  for (const auto& g : small_corpus()) {
    auto inv = abelian_invariants(g);
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion_order() * commutator_subgroup(g).order() == g.order());
    for (std::size_t i = 0; i + 1 < inv.torsion.size(); ++i) CHECK(inv.torsion[i + 1] % inv.torsion[i] == 0);
  }
}

TEST_CASE("derived and lower central series") {
  auto orders = [](const std::vector<Subgroup>& s) {
    std::vector<std::size_t> out;
    for (const auto& x : s) out.push_back(x.order());
    return out;
  };
  CHECK(orders(derived_series(groups::symmetric(3))) == std::vector<std::size_t>{6, 3, 1});
  CHECK(orders(derived_series(groups::cyclic(4))) == std::vector<std::size_t>{4, 1});
  CHECK(orders(derived_series(groups::quaternion())) == std::vector<std::size_t>{8, 2, 1});
  CHECK(orders(lower_central_series(groups::dihedral(4))) == std::vector<std::size_t>{8, 2, 1});
  // Stabilized term is listed once.
  CHECK(orders(lower_central_series(groups::symmetric(3))) == std::vector<std::size_t>{6, 3});
  CHECK(orders(lower_central_series(groups::klein_four())) == std::vector<std::size_t>{4, 1});
  for (const auto& g : small_corpus()) {
    for (const auto& s : derived_series(g)) CHECK(normal_in(g, s));
    for (const auto& s : lower_central_series(g)) CHECK(normal_in(g, s));
  }
}

TEST_CASE("homomorphisms") {
  PermGroup s3 = groups::symmetric(3);
  auto id = GroupHom::identity(s3);
  CHECK(id.kernel().is_trivial());

  PermGroup c2 = groups::cyclic(2);
  // sign: transposition -> generator, 3-cycle -> identity
  auto sign = GroupHom::from_generator_images(s3, c2, {1, 0});
  CHECK(sign.kernel().order() == 3);
  CHECK(sign.is_surjective());

  PermGroup c4 = groups::cyclic(4);
  auto mod2 = GroupHom::from_generator_images(c4, c2, {1});
  CHECK(mod2.kernel().order() == 2);

  // transposition -> 1, 3-cycle -> generator of C2 violates (ab)^2-type relators
  CHECK_THROWS_AS(GroupHom::from_generator_images(s3, c2, {0, 1}), NotAHomomorphism);
  PermGroup c3 = groups::cyclic(3);
  CHECK_THROWS_AS(GroupHom::from_generator_images(c3, c2, {1}), NotAHomomorphism);
}

TEST_CASE("relator check on a presentation") {
  // <a, b | a^2, b^3, (ab)^2>
  FpGroup p({"a", "b"}, {Word::power(0, 2), Word::power(1, 3),
                         Word({{0, 1}, {1, 1}, {0, 1}, {1, 1}})});
  PermGroup s3 = groups::symmetric(3);
  PermGroup c2 = groups::cyclic(2);
  std::vector<Elem> sign_images{1, 0};
  CHECK(first_failing_relator(p, c2, sign_images) == -1);
  std::vector<Elem> bad{0, 1};
  CHECK(first_failing_relator(p, c2, bad) == 1);
}

TEST_CASE("fingerprint") {
  CHECK(fingerprint(groups::cyclic(4)) != fingerprint(groups::klein_four()));
  auto q = fingerprint(groups::quaternion());
  auto d = fingerprint(groups::dihedral(4));
  CHECK(q != d);
  CHECK(q.order_histogram.at(4) == 6);
  CHECK(d.order_histogram.at(4) == 2);
  // Relabelled copy: conjugate every generator by a fixed permutation.
  PermGroup s3 = groups::symmetric(3);
  Perm sigma = cyc(3, {{0, 2}});
  std::vector<Perm> gens;
  for (const auto& g : s3.generators()) gens.push_back(sigma.inverse() * g * sigma);
  CHECK(fingerprint(PermGroup(3, gens)) == fingerprint(s3));
}

TEST_CASE("words") {
  Word w({{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}});
  CHECK(w.free_reduced() == Word({{2, 1}}));
  CHECK(w.free_reduced().free_reduced() == w.free_reduced());
  Word c({{0, 1}, {1, 1}, {0, -1}});
  CHECK(c.cyclically_reduced() == Word({{1, 1}}));
  CHECK((w * w.inverse()).free_reduced().empty());
  CHECK_THROWS_AS(FpGroup({"a"}, {Word({{1, 1}})}), InvalidArgument);
}
