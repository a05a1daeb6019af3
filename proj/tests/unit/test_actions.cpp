#include "doctest.h"
#include "nabt/abelian.hpp"
#include "nabt/constructions.hpp"
#include "nabt/errors.hpp"
#include "nabt/groups.hpp"

using namespace nabt;

namespace {

// C2 = <t> acting on Cn by inversion.
Action inversion(const PermGroup& c2, const PermGroup& cn) {
  Elem gen = cn.generator_elements().front();
  return Action::from_generator_images(c2, cn, {{cn.inv(gen)}});
}

MutualActions conj_square(const PermGroup& g) {
  Subgroup whole = Subgroup::whole(g);
  return conjugation_mutual(g, whole, whole);
}

}  // namespace

TEST_CASE("action validation") {
  PermGroup c2 = groups::cyclic(2);
  PermGroup c3 = groups::cyclic(3);
  CHECK(Action::trivial(c2, c3).is_trivial());
  CHECK_FALSE(inversion(c2, c3).is_trivial());
  // C3 has no automorphism of order 3, so "generator acts by inversion" is not a C3-action.
  CHECK_THROWS_AS(inversion(c3, c3), InvalidAction);
  // Not a bijection.
  std::vector<std::vector<Elem>> bad{{0, 1, 2}, {0, 0, 0}};
  CHECK_THROWS_AS(Action(c2, c3, bad), InvalidAction);
}

TEST_CASE("conjugation_mutual") {
  PermGroup s3 = groups::symmetric(3);
  auto sq = conj_square(s3);
  CHECK(sq.certified);
  CHECK_FALSE(check_compatible(sq).has_value());

  Subgroup a3 = commutator_subgroup(s3);
  auto pair = conjugation_mutual(s3, Subgroup::whole(s3), a3);
  CHECK(pair.certified);
  CHECK(pair.h().order() == 3);

  Elem t[] = {s3.index_of(Perm::from_cycles(3, {{0, 1}}))};
  CHECK_THROWS_AS(conjugation_mutual(s3, Subgroup::whole(s3), subgroup_generated(s3, t)), NotNormal);
}

TEST_CASE("check_compatible") {
  SUBCASE("conjugation pairs are certified by the exhaustive check") {
    for (auto name : {"S3", "D4", "Q8", "A4", "C2xC4"}) {
      PermGroup g = groups::by_name(name).value();
      for (const auto& n : normal_subgroups(g)) {
        auto ma = conjugation_mutual(g, Subgroup::whole(g), n);
        CHECK_FALSE(check_compatible(ma).has_value());
      }
    }
  }
  SUBCASE("C2 inverting Cn with trivial back-action") {
    PermGroup c2 = groups::cyclic(2);
    for (std::size_t n : {3, 4, 5, 6}) {
      PermGroup cn = groups::cyclic(n);
      auto ma = make_mutual(inversion(c2, cn), Action::trivial(cn, c2));
      CHECK(ma.certified);
    }
  }
  SUBCASE("S3 conjugating S3 against a trivial back-action") {
    PermGroup s3 = groups::symmetric(3);
    auto ma = make_mutual(Action::conjugation(Subgroup::whole(s3), Subgroup::whole(s3)),
                          Action::trivial(s3, s3));
    REQUIRE_FALSE(ma.certified);
    REQUIRE(ma.violation.has_value());
    const auto& v = *ma.violation;
    CHECK(v.equation == 1);
    CHECK(replay(ma.g_on_h, ma.h_on_g, v));
    // Minimal witness: exhaustive scan in canonical order agrees.
    bool earlier = false;
    for (Elem g = 0; g < s3.order() && !earlier; ++g)
      for (Elem h = 0; h < s3.order() && !earlier; ++h)
        for (Elem h2 = 0; h2 < s3.order(); ++h2) {
          if (std::tie(g, h, h2) >= std::tie(v.g, v.h, v.other)) break;
          CompatibilityViolation probe{1, g, h, h2, 0, 0};
          Elem lhs = ma.g_on_h(ma.h_on_g(h, g), h2);
          Elem rhs = s3.conjugate(h, ma.g_on_h(g, s3.conjugate(s3.inv(h), h2)));
          earlier = earlier || lhs != rhs;
          (void)probe;
        }
    CHECK_FALSE(earlier);
    // A tampered record does not replay.
    auto forged = v;
    forged.lhs = forged.rhs;
    CHECK_FALSE(replay(ma.g_on_h, ma.h_on_g, forged));
  }
}

TEST_CASE("semidirect_product") {
  PermGroup c2 = groups::cyclic(2);
  PermGroup c3 = groups::cyclic(3);
  auto direct = semidirect_product(Action::trivial(c2, c3));
  CHECK(direct.group().order() == 6);
  CHECK(direct.group().is_abelian());

  auto s3 = semidirect_product(inversion(c2, c3));
  CHECK(fingerprint(s3.group()) == fingerprint(groups::symmetric(3)));
  CHECK(s3.embedding_g().is_injective());
  CHECK(s3.embedding_h().is_injective());
  // Product rule on every pair of pairs.
  auto act = inversion(c2, c3);
  for (Elem g = 0; g < 3; ++g)
    for (Elem h = 0; h < 2; ++h)
      for (Elem g2 = 0; g2 < 3; ++g2)
        for (Elem h2 = 0; h2 < 2; ++h2)
          CHECK(s3.group().mul(s3.pair(g, h), s3.pair(g2, h2)) ==
                s3.pair(c3.mul(g, act(h, g2)), c2.mul(h, h2)));

  PermGroup q8 = groups::quaternion();
  auto same = semidirect_product(Action::trivial(PermGroup::trivial(), q8));
  CHECK(fingerprint(same.group()) == fingerprint(q8));
}

TEST_CASE("peiffer_subgroup") {
  PermGroup c2 = groups::cyclic(2);
  PermGroup c3 = groups::cyclic(3);
  {
    auto ma = make_mutual(Action::trivial(c2, c3), Action::trivial(c3, c2));
    auto sdp = semidirect_product(ma.h_on_g);
    CHECK(peiffer_subgroup(sdp, ma).subgroup.is_trivial());
  }
  {
    // G = C2 inverting H = C3; H acts trivially on G.
    auto ma = make_mutual(inversion(c2, c3), Action::trivial(c3, c2));
    REQUIRE(ma.certified);
    auto sdp = semidirect_product(ma.h_on_g);
    auto p = peiffer_subgroup(sdp, ma);
    CHECK(p.subgroup.order() == 3);
    for (Elem e : p.subgroup.elements()) CHECK(sdp.split(e).first == PermGroup::identity());
  }
  {
    PermGroup s3 = groups::symmetric(3);
    auto ma = conj_square(s3);
    auto sdp = semidirect_product(ma.h_on_g);
    auto p = peiffer_subgroup(sdp, ma);
    Subgroup a3 = commutator_subgroup(s3);
    for (Elem e : p.subgroup.elements()) {
      auto [g, h] = sdp.split(e);
      CHECK(a3.contains(g));
      CHECK(a3.contains(h));
    }
    CHECK(p.subgroup.is_normal());
  }
}

TEST_CASE("circ_product") {
  PermGroup c2 = groups::cyclic(2);
  PermGroup c3 = groups::cyclic(3);
  {
    auto circ = circ_product(make_mutual(Action::trivial(c2, c3), Action::trivial(c3, c2)));
    CHECK(circ.group.order() == 6);
    CHECK(circ.mu.is_injective());
    CHECK(circ.nu.is_injective());
  }
  {
    PermGroup s3 = groups::symmetric(3);
    auto circ = circ_product(conj_square(s3));
    Subgroup inter = intersection(circ.mu.image(), circ.nu.image());
    CHECK(inter.is_normal());
    CHECK_FALSE(check_crossed_module(circ.mu, circ.on_g).has_value());
    CHECK_FALSE(check_crossed_module(circ.nu, circ.on_h).has_value());
    Subgroup ker_mu = circ.mu.kernel();
    CHECK(ker_mu.as_group().is_abelian());
  }
  {
    PermGroup q8 = groups::quaternion();
    PermGroup one = PermGroup::trivial();
    auto circ = circ_product(make_mutual(Action::trivial(q8, one), Action::trivial(one, q8)));
    CHECK(circ.mu.is_injective());
    CHECK(circ.mu.is_surjective());
  }
  {
    PermGroup s3 = groups::symmetric(3);
    auto ma = make_mutual(Action::conjugation(Subgroup::whole(s3), Subgroup::whole(s3)),
                          Action::trivial(s3, s3));
    CHECK_THROWS_AS(circ_product(ma), InvalidArgument);
  }
}

TEST_CASE("derivative") {
  PermGroup c5 = groups::cyclic(5);
  PermGroup c2 = groups::cyclic(2);
  CHECK(derivative(Action::trivial(c2, c5)).is_trivial());
  CHECK(derivative(inversion(c2, c5)).order() == 5);
  for (auto name : {"S3", "D4", "Q8", "A4", "D6"}) {
    PermGroup g = groups::by_name(name).value();
    auto ma = conj_square(g);
    CHECK(derivative(ma.h_on_g) == restrict_to(Subgroup::whole(g), commutator_subgroup(g)));
  }
}

TEST_CASE("check_crossed_module") {
  PermGroup d4 = groups::dihedral(4);
  Subgroup whole = Subgroup::whole(d4);
  for (const auto& n : normal_subgroups(d4)) {
    auto incl = GroupHom::inclusion(n);
    CHECK_FALSE(check_crossed_module(incl, Action::conjugation(whole, n)).has_value());
  }
  CHECK_FALSE(check_crossed_module(GroupHom::identity(d4), Action::conjugation(whole, whole)).has_value());
  // Identity map with the trivial action is not equivariant.
  auto v = check_crossed_module(GroupHom::identity(d4), Action::trivial(d4, d4));
  REQUIRE(v.has_value());
  CHECK(v->axiom == 1);
}
