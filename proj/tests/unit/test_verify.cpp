#include <algorithm>

#include "doctest.h"
#include "nabt/errors.hpp"
#include "nabt/groups.hpp"
#include "nabt/verify.hpp"

using namespace nabt;

namespace {

std::string fact(const VerificationReport& r, const std::string& check, const std::string& key) {
  for (const auto& c : r.cases)
    if (c.check == check)
      for (const auto& [k, v] : c.facts)
        if (k == key) return v;
  return "";
}

const CaseResult* find_case(const VerificationReport& r, const std::string& check) {
  for (const auto& c : r.cases)
    if (c.check == check) return &c;
  return nullptr;
}

Subgroup normal_of_order(const PermGroup& g, std::size_t order) {
  for (const auto& n : normal_subgroups(g))
    if (n.order() == order) return n;
  throw InvalidArgument("no such normal subgroup");
}

}  // namespace

TEST_CASE("corpus") {
  Corpus c = Corpus::standard();
  CHECK(c.groups.size() == 15);
  CHECK(c.find("Q8")->group.order() == 8);
  CHECK(c.find("C3xC3")->group.order() == 9);
  CHECK(c.find("nope") == nullptr);
  CHECK(c.extensions.size() == 4);
  for (const auto& e : c.extensions) CHECK(e.kernel.is_subset_of(center(e.group)));
  PermGroup s3 = groups::symmetric(3);
  CHECK_THROWS_AS(make_extension("bad", s3, commutator_subgroup(s3)), NotCentral);
  CHECK(subgroup_label("S3", Subgroup::whole(s3)) == "S3");
  CHECK(subgroup_label("S3", Subgroup::trivial(s3)) == "1");
}

TEST_CASE("run_corpus") {
  SUBCASE("empty corpus") {
    auto r = run_corpus(Corpus{}, {});
    CHECK(r.cases.empty());
    CHECK(r.ok());
  }
  SUBCASE("unknown suite") { CHECK_THROWS_AS(run_corpus(Corpus{}, {"bogus"}), InvalidArgument); }
  SUBCASE("corrupted action pair fails with a replayable witness") {
    PermGroup s3 = groups::symmetric(3);
    Corpus c;
    c.action_pairs.push_back({"corrupt", Action::conjugation(Subgroup::whole(s3), Subgroup::whole(s3)),
                              Action::trivial(s3, s3), true});
    auto r = run_corpus(c, {"compatibility"});
    CHECK_FALSE(r.ok());
    const CaseResult* cert = find_case(r, "certification");
    REQUIRE(cert != nullptr);
    CHECK(cert->status == CaseStatus::fail);
    CHECK(cert->witness.size() == 3);
    const CaseResult* rep = find_case(r, "witness replay");
    REQUIRE(rep != nullptr);
    CHECK(rep->status == CaseStatus::pass);
  }
  SUBCASE("deterministic apart from timings") {
    Corpus c = Corpus::standard();
    c.groups.erase(c.groups.begin() + 4, c.groups.end());
    auto strip = [](VerificationReport r) {
      for (auto& cs : r.cases) cs.seconds = 0;
      return r;
    };
    auto a = strip(run_corpus(c, {}));
    auto b = strip(run_corpus(c, {}));
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
      CHECK(a.cases[i].suite == b.cases[i].suite);
      CHECK(a.cases[i].subject == b.cases[i].subject);
      CHECK(a.cases[i].check == b.cases[i].check);
      CHECK(a.cases[i].facts == b.cases[i].facts);
    }
    CHECK(a.config == b.config);
  }
  SUBCASE("suite order is canonical") {
    Corpus c = Corpus::standard();
    c.groups.erase(c.groups.begin() + 3, c.groups.end());
    auto r = run_corpus(c, {"derivative_lcs", "schur_classes"});
    CHECK(r.cases.front().suite == "schur_classes");
    CHECK(r.cases.back().suite == "derivative_lcs");
  }
}

TEST_CASE("bjr identities and the abelian quotient") {
  PermGroup s3 = groups::symmetric(3);
  auto p = normal_pair_tensors(normal_of_order(s3, 3));
  CHECK(verify_bjr_identities("S3,A3", p).ok());
  auto q = verify_normal_abelian_quotient("S3,A3", p);
  CHECK(q.ok());
  CHECK(std::stoul(fact(q, "quotient abelian", "quotient_order")) * std::stoul(fact(q, "i(H(x)H) normal", "image_order")) ==
        p.gh.carrier.order());

  PermGroup d4 = groups::dihedral(4);
  CHECK(verify_bjr_identities("D4,Z", normal_pair_tensors(center(d4))).ok());
  PermGroup q8 = groups::quaternion();
  CHECK(verify_normal_abelian_quotient("Q8,Z", normal_pair_tensors(center(q8))).ok());

  for (const char* name : {"C4", "V4", "C2xC4"}) {
    PermGroup g = *groups::by_name(name);
    auto pg = normal_pair_tensors(Subgroup::whole(g));
    CHECK(verify_bjr_identities(name, pg).ok());
    auto r = verify_normal_abelian_quotient(name, pg);
    CHECK(r.ok());
    CHECK(fact(r, "quotient abelian", "quotient_order") == "1");
  }
}

TEST_CASE("lemma 2.6 sequence") {
  Corpus c = Corpus::standard();
  for (const auto& t : c.triples) {
    CAPTURE(t.name);
    CHECK(verify_lemma26_sequence(t.name, t.g, t.h).ok());
  }
  PermGroup c6 = groups::cyclic(6);
  auto r = verify_lemma26_sequence("C6", normal_of_order(c6, 2), normal_of_order(c6, 3));
  CHECK(r.ok());
  CHECK(fact(r, "right map onto", "middle_order") == "1");
  CHECK(fact(r, "right map onto", "right_order") == "1");
  PermGroup s3 = groups::symmetric(3);
  auto deg = verify_lemma26_sequence("S3", Subgroup::whole(s3), Subgroup::whole(s3));
  CHECK(deg.ok());
  CHECK(fact(deg, "right map onto", "right_order") == "1");
  PermGroup a4 = groups::alternating(4);
  Subgroup c3 = subgroup_generated(a4, std::vector<Elem>{a4.generator_elements().front()});
  if (!c3.is_normal()) CHECK_FALSE(verify_lemma26_sequence("A4", c3, Subgroup::whole(a4)).ok());
}

TEST_CASE("circ kernels") {
  PermGroup c2 = groups::cyclic(2);
  PermGroup c3 = groups::cyclic(3);
  auto triv = verify_circ_kernels("triv", make_mutual(Action::trivial(c2, c3), Action::trivial(c3, c2)));
  CHECK(triv.ok());
  CHECK(fact(triv, "construction", "ker_mu_order") == "1");
  CHECK(fact(triv, "construction", "ker_nu_order") == "1");
  PermGroup s3 = groups::symmetric(3);
  Subgroup whole = Subgroup::whole(s3);
  auto conj = verify_circ_kernels("S3", conjugation_mutual(s3, whole, whole));
  CHECK(conj.ok());
  CHECK_FALSE(fact(conj, "construction", "ker_mu_order").empty());
  Elem gen = c3.generator_elements().front();
  auto inv = make_mutual(Action::from_generator_images(c2, c3, {{c3.inv(gen)}}), Action::trivial(c3, c2));
  CHECK(verify_circ_kernels("inv", inv).ok());
  auto skipped = verify_circ_kernels("mixed", make_mutual(Action::conjugation(whole, whole), Action::trivial(s3, s3)));
  CHECK(skipped.count(CaseStatus::skipped) == 1);
}

TEST_CASE("schur epimorphism") {
  Corpus c = Corpus::standard();
  for (const auto& e : c.extensions) {
    CAPTURE(e.name);
    CHECK(verify_schur_epimorphism(e).ok());
  }
  PermGroup q8 = groups::quaternion();
  auto r = verify_schur_epimorphism(make_extension("Q8/Z", q8, center(q8)));
  CHECK(fact(r, "X normal", "tensor_order_h") == "16");
  CHECK(fact(r, "X normal", "commutator_order") == "2");
  // A kernel that is not central is reported, not thrown.
  PermGroup s3 = groups::symmetric(3);
  CorpusExtension bad{"bad", s3, commutator_subgroup(s3)};
  auto b = verify_schur_epimorphism(bad);
  CHECK_FALSE(b.ok());
  CHECK(find_case(b, "central kernel")->witness.size() == 1);
}

TEST_CASE("schur classes and derivative series") {
  auto q8 = verify_schur_classes("Q8", groups::quaternion());
  CHECK(q8.ok());
  CHECK(fact(q8, "p-group", "p") == "2");
  CHECK(verify_schur_classes("D4", groups::dihedral(4)).ok());
  CHECK(verify_schur_classes("C6", groups::cyclic(6)).ok());
  CHECK(verify_schur_classes("S3", groups::symmetric(3)).count(CaseStatus::skipped) == 1);

  auto d4 = verify_derivative_lcs("D4", groups::dihedral(4));
  CHECK(d4.ok());
  CHECK(fact(d4, "D_G(gamma_1) = gamma_2", "order") == "2");
  CHECK(fact(d4, "D_G(gamma_2) = gamma_3", "order") == "1");
  auto s3 = verify_derivative_lcs("S3", groups::symmetric(3));
  CHECK(s3.ok());
  CHECK(fact(s3, "D_G(gamma_2) = gamma_3", "order") == "3");
  auto c4 = verify_derivative_lcs("C4", groups::cyclic(4));
  CHECK(c4.ok());
  CHECK(fact(c4, "D_G(gamma_1) = gamma_2", "order") == "1");
}

TEST_CASE("full corpus passes") {
  auto r = run_corpus(Corpus::standard(), {});
  for (const auto& c : r.cases)
    if (c.status == CaseStatus::fail) FAIL_CHECK(c.suite << " " << c.subject << " " << c.check << ": " << c.detail);
  CHECK(r.ok());
  for (const auto& s : suite_names())
    CHECK(std::any_of(r.cases.begin(), r.cases.end(), [&](const CaseResult& c) { return c.suite == s; }));
}
