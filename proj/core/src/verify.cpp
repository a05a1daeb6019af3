#include "nabt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "nabt/constructions.hpp"
#include "nabt/errors.hpp"
#include "nabt/subgroup.hpp"

namespace nabt {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(std::uint64_t v) { return std::to_string(v); }

// Appends cases for one (suite, subject); each case is timed from the
// previous one.
class Recorder {
 public:
  Recorder(VerificationReport& report, std::string suite, std::string subject)
      : report_(report), suite_(std::move(suite)), subject_(std::move(subject)), last_(Clock::now()) {}

  CaseResult& pass(std::string check, std::vector<Fact> facts = {}) {
    return add(std::move(check), CaseStatus::pass, {}, {}, std::move(facts));
  }
  CaseResult& fail(std::string check, std::string detail, std::vector<std::uint64_t> witness = {},
                   std::vector<Fact> facts = {}) {
    return add(std::move(check), CaseStatus::fail, std::move(detail), std::move(witness), std::move(facts));
  }
  CaseResult& skip(std::string check, std::string reason) {
    return add(std::move(check), CaseStatus::skipped, std::move(reason), {}, {});
  }
  CaseResult& expect(std::string check, bool ok, std::string detail, std::vector<std::uint64_t> witness = {},
                     std::vector<Fact> facts = {}) {
    return ok ? pass(std::move(check), std::move(facts))
              : fail(std::move(check), std::move(detail), std::move(witness), std::move(facts));
  }

  // Runs `body`; library errors other than resource limits become a failed
  // case named `check`.
  void guard(const std::string& check, const std::function<void()>& body) {
    try {
      body();
    } catch (const LimitExceeded&) {
      throw;
    } catch (const BoundExceeded&) {
      throw;
    } catch (const Error& e) {
      fail(check, e.what());
    }
  }

 private:
  CaseResult& add(std::string check, CaseStatus status, std::string detail, std::vector<std::uint64_t> witness,
                  std::vector<Fact> facts) {
    auto now = Clock::now();
    CaseResult c;
    c.suite = suite_;
    c.subject = subject_;
    c.check = std::move(check);
    c.status = status;
    c.detail = std::move(detail);
    c.witness = std::move(witness);
    c.facts = std::move(facts);
    c.seconds = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    report_.cases.push_back(std::move(c));
    return report_.cases.back();
  }

  VerificationReport& report_;
  std::string suite_;
  std::string subject_;
  Clock::time_point last_;
};

bool is_prime_power(std::uint64_t n, std::uint64_t& p) {
  if (n < 2) return false;
  for (p = 2; p * p <= n; ++p)
    if (n % p == 0) break;
  if (p * p > n) p = n;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

bool all_trivial(const MutualActions& ma) { return ma.g_on_h.is_trivial() && ma.h_on_g.is_trivial(); }

// Pairing images of generator pairs generate the carrier.
bool generator_pairs_generate(const TensorGroup& t) {
  std::vector<Elem> s;
  for (Elem a : t.g().generator_elements())
    for (Elem b : t.h().generator_elements()) s.push_back(t.pair(a, b));
  return subgroup_generated(t.carrier, s).order() == t.carrier.order();
}

}  // namespace

NormalPairTensors normal_pair_tensors(const Subgroup& h, const TensorLimits& limits) {
  const PermGroup& g = h.ambient();
  Subgroup whole = Subgroup::whole(g);
  NormalPairTensors p{h, tensor_product(conjugation_mutual(g, whole, h), limits),
                      tensor_product(conjugation_mutual(g, h, h), limits), std::nullopt, {}};
  const std::size_t nh = h.order();
  std::vector<Elem> images;
  for (std::size_t s = 0; s < nh * nh; ++s)
    images.push_back(p.gh.pair(h.ambient_of(static_cast<Elem>(s / nh)), static_cast<Elem>(s % nh)));
  try {
    p.i = GroupHom::from_generator_images(p.hh.carrier, p.gh.carrier, std::move(images));
  } catch (const NotAHomomorphism& e) {
    p.i_error = e.what();
  }
  return p;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "compatibility", "tensor_product", "tensor_square",  "bjr_identities",    "normal_abelian_quotient",
      "lemma26_sequence", "circ_kernels", "schur_epimorphism", "schur_classes", "derivative_lcs"};
  return names;
}

VerificationReport verify_compatibility(const CorpusActionPair& pair) {
  VerificationReport report;
  Recorder rec(report, "compatibility", pair.name);
  MutualActions ma = make_mutual(pair.g_on_h, pair.h_on_g);
  std::vector<Fact> facts{{"expected", pair.expect_compatible ? "compatible" : "incompatible"},
                          {"certified", ma.certified ? "yes" : "no"}};
  if (ma.certified == pair.expect_compatible) {
    rec.pass("certification", std::move(facts));
  } else if (ma.violation) {
    const auto& v = *ma.violation;
    rec.fail("certification", "unexpected violation of equation " + str(v.equation) + " at (g, h, other)",
             {v.g, v.h, v.other}, std::move(facts));
  } else {
    rec.fail("certification", "expected a violation but the actions are compatible", {}, std::move(facts));
  }
  if (ma.violation) {
    const auto& v = *ma.violation;
    rec.expect("witness replay", replay(ma.g_on_h, ma.h_on_g, v),
               "witness does not re-evaluate to a violation of equation " + str(v.equation), {v.g, v.h, v.other},
               {{"witness", v.to_string()}});
  }
  return report;
}

VerificationReport verify_tensor_product(const std::string& name, const MutualActions& ma,
                                         const VerifyConfig& config) {
  VerificationReport report;
  Recorder rec(report, "tensor_product", name);
  if (!ma.certified) {
    rec.skip("construction", "actions are not compatible");
    return report;
  }
  rec.guard("construction", [&] {
    TensorGroup t = tensor_product(ma, config.limits);
    const PermGroup& g = t.g();
    const PermGroup& h = t.h();
    rec.pass("construction", {{"order", str(t.carrier.order())},
                              {"abelian_invariants", abelian_invariants(t.carrier).to_string()},
                              {"cosets_defined", str(t.cosets_defined)},
                              {"generator_pairs_generate", generator_pairs_generate(t) ? "yes" : "no"},
                              {"derivative_order_g", str(derivative(ma.h_on_g).order())},
                              {"derivative_order_h", str(derivative(ma.g_on_h).order())}});
    auto violations = audit_relations(t);
    if (violations.empty()) {
      rec.pass("relation audit");
    } else {
      const auto& v = violations.front();
      rec.fail("relation audit", "relation family " + str(v.family) + " fails", {v.a, v.b, v.c});
    }

    // ^x (a (x) b) = ^x a (x) ^x b for both actors.
    std::optional<std::vector<std::uint64_t>> bad_g, bad_h;
    for (Elem x = 0; x < g.order() && !bad_g; ++x)
      for (Elem a = 0; a < g.order() && !bad_g; ++a)
        for (Elem b = 0; b < h.order() && !bad_g; ++b)
          if (t.g_action(x, t.pair(a, b)) != t.pair(g.conjugate(x, a), ma.g_on_h(x, b))) bad_g = {{x, a, b}};
    for (Elem y = 0; y < h.order() && !bad_h; ++y)
      for (Elem a = 0; a < g.order() && !bad_h; ++a)
        for (Elem b = 0; b < h.order() && !bad_h; ++b)
          if (t.h_action(y, t.pair(a, b)) != t.pair(ma.h_on_g(y, a), h.conjugate(y, b))) bad_h = {{y, a, b}};
    rec.expect("induced G-action", !bad_g, "^x (a (x) b) differs at (x, a, b)", bad_g.value_or(std::vector<std::uint64_t>{}));
    rec.expect("induced H-action", !bad_h, "^y (a (x) b) differs at (y, a, b)", bad_h.value_or(std::vector<std::uint64_t>{}));

    if (auto v = check_crossed_module(t.phi, t.g_action))
      rec.fail("phi crossed module", "axiom " + str(v->axiom) + " fails", {v->first, v->second});
    else
      rec.pass("phi crossed module");
    Subgroup ker = t.phi.kernel();
    Subgroup z = center(t.carrier);
    auto outside = std::find_if(ker.elements().begin(), ker.elements().end(), [&](Elem k) { return !z.contains(k); });
    rec.expect("ker phi central", outside == ker.elements().end(), "kernel element is not central",
               outside == ker.elements().end() ? std::vector<std::uint64_t>{} : std::vector<std::uint64_t>{*outside},
               {{"kernel_order", str(ker.order())}});
    Subgroup image = t.phi.image();
    rec.expect("im phi = D_H(G)", image == derivative(ma.h_on_g), "image of phi differs from the derivative", {},
               {{"image_order", str(image.order())}});

    if (all_trivial(ma)) {
      AbelianInvariants expected = trivial_action_tensor(g, h);
      AbelianInvariants got = abelian_invariants(t.carrier);
      rec.expect("trivial actions give the abelian tensor", t.carrier.is_abelian() && got == expected,
                 "carrier " + got.to_string() + " differs from " + expected.to_string(), {},
                 {{"expected", expected.to_string()}});
    }

    MutualActions swapped = make_mutual(ma.h_on_g, ma.g_on_h);
    if (!swapped.certified) {
      rec.fail("symmetry", "swapped actions are not compatible");
    } else {
      TensorGroup s = tensor_product(swapped, config.limits);
      rec.expect("symmetry", fingerprint(s.carrier) == fingerprint(t.carrier),
                 "H (x) G and G (x) H have different fingerprints");
    }
  });
  return report;
}

VerificationReport verify_tensor_square(const std::string& name, const PermGroup& g, const VerifyConfig& config) {
  VerificationReport report;
  Recorder rec(report, "tensor_square", name);
  rec.guard("construction", [&] {
    ExteriorSquare ext = exterior_square(g, config.limits);
    const TensorGroup& t = ext.tensor;
    Subgroup comm = commutator_subgroup(g);
    rec.pass("construction", {{"order", str(t.carrier.order())},
                              {"abelian_invariants", abelian_invariants(t.carrier).to_string()},
                              {"nabla_order", str(ext.diagonal.order())},
                              {"exterior_order", str(ext.group.order())},
                              {"generator_pairs_generate", generator_pairs_generate(t) ? "yes" : "no"}});
    GroupHom lambda = lambda_hom(t);
    rec.expect("lambda onto [G,G]", lambda.is_surjective(), "lambda is not surjective");
    bool agrees = true;
    for (Elem x : t.pairing) agrees = agrees && comm.ambient_of(lambda(x)) == t.phi(x);
    rec.expect("lambda = phi", agrees, "lambda and phi differ on a symbol");
    rec.expect("nabla in ker lambda", ext.diagonal.is_subset_of(lambda.kernel()), "nabla is not in ker lambda");
    rec.expect("|G(x)G| = |nabla| |G^G|", t.carrier.order() == ext.diagonal.order() * ext.group.order(),
               "order law fails");

    MultiplierResult m = schur_multiplier_of(ext);
    rec.expect("ker kappa central", m.kernel_central, "ker kappa is not central");
    if (g.order() > config.bar_bound) {
      rec.skip("|G^G| = |H2(G)| |[G,G]|", "|G| exceeds the bar bound");
      rec.skip("multiplier = bar resolution", "|G| exceeds the bar bound");
      return;
    }
    AbelianInvariants bar = h2_bar_resolution(g, config.bar_bound);
    rec.expect("|G^G| = |H2(G)| |[G,G]|",
               bar.free_rank == 0 && ext.group.order() == bar.torsion_order() * comm.order(), "order law fails", {},
               {{"h2_order", str(bar.torsion_order())}, {"commutator_order", str(comm.order())}});
    rec.expect("multiplier = bar resolution", m.invariants == bar,
               "ker kappa " + m.invariants.to_string() + " but bar resolution " + bar.to_string(), {},
               {{"multiplier", m.invariants.to_string()}});
  });
  return report;
}

VerificationReport verify_bjr_identities(const std::string& name, const NormalPairTensors& p) {
  VerificationReport report;
  Recorder rec(report, "bjr_identities", name);
  if (!p.i) {
    rec.fail("i well defined", p.i_error);
    return report;
  }
  const TensorGroup& t = p.gh;
  const PermGroup& g = t.g();
  const PermGroup& c = t.carrier;
  const Subgroup& h = p.h;
  const Elem nh = static_cast<Elem>(h.order());
  const Elem ng = static_cast<Elem>(g.order());
  auto amb = [&](Elem y) { return h.ambient_of(y); };
  auto conj_h = [&](Elem x, Elem y) { return h.local(g.conjugate(x, amb(y))); };

  // (g' (x) h')(g (x) h)(g' (x) h')^-1 = ^k g (x) ^k h with k = [g', h'].
  std::optional<std::vector<std::uint64_t>> bad1;
  for (Elem g2 = 0; g2 < ng && !bad1; ++g2)
    for (Elem h2 = 0; h2 < nh && !bad1; ++h2) {
      Elem a = t.pair(g2, h2);
      Elem ainv = c.inv(a);
      Elem k = g.commutator(g2, amb(h2));
      for (Elem x = 0; x < ng && !bad1; ++x)
        for (Elem y = 0; y < nh && !bad1; ++y)
          if (c.mul(c.mul(a, t.pair(x, y)), ainv) != t.pair(g.conjugate(k, x), conj_h(k, y)))
            bad1 = {{x, y, g2, h2}};
    }
  rec.expect("identity 1", !bad1, "fails at (g, h, g', h')", bad1.value_or(std::vector<std::uint64_t>{}));

  // g (x) [h, h'] = ^g(h (x) h') (h (x) h')^-1.
  std::optional<std::vector<std::uint64_t>> bad_c;
  for (Elem x = 0; x < ng && !bad_c; ++x)
    for (Elem y = 0; y < nh && !bad_c; ++y)
      for (Elem y2 = 0; y2 < nh && !bad_c; ++y2) {
        Elem s = t.pair(amb(y), y2);
        Elem comm = h.local(g.commutator(amb(y), amb(y2)));
        if (t.pair(x, comm) != c.mul(t.g_action(x, s), c.inv(s))) bad_c = {{x, y, y2}};
      }
  rec.expect("commutator identity", !bad_c, "fails at (g, h, h')", bad_c.value_or(std::vector<std::uint64_t>{}));

  Subgroup image = p.i->image();
  // a i(H(x)H) = b i(H(x)H) iff b^-1 a lies in the image.
  auto congruent = [&](Elem a, Elem b) { return image.contains(c.mul(c.inv(b), a)); };
  std::optional<std::vector<std::uint64_t>> bad2, bad3;
  for (Elem x = 0; x < ng; ++x)
    for (Elem y = 0; y < nh; ++y)
      for (Elem y2 = 0; y2 < nh; ++y2) {
        if (!bad2 && !congruent(t.pair(x, h.local(g.conjugate(amb(y2), amb(y)))), t.pair(x, y))) bad2 = {{x, y, y2}};
        if (!bad3 && !congruent(t.pair(g.conjugate(amb(y2), x), y), t.pair(x, y))) bad3 = {{x, y, y2}};
      }
  rec.expect("congruence 2", !bad2, "g (x) ^h' h and g (x) h differ mod i(H(x)H) at (g, h, h')",
             bad2.value_or(std::vector<std::uint64_t>{}));
  rec.expect("congruence 3", !bad3, "^h' g (x) h and g (x) h differ mod i(H(x)H) at (g, h, h')",
             bad3.value_or(std::vector<std::uint64_t>{}));
  return report;
}

VerificationReport verify_normal_abelian_quotient(const std::string& name, const NormalPairTensors& p) {
  VerificationReport report;
  Recorder rec(report, "normal_abelian_quotient", name);
  if (!p.i) {
    rec.fail("i well defined", p.i_error);
    return report;
  }
  Subgroup image = p.i->image();
  const PermGroup& c = p.gh.carrier;
  bool normal = image.is_normal();
  rec.expect("i(H(x)H) normal", normal, "image of i is not normal", {},
             {{"tensor_order", str(c.order())}, {"image_order", str(image.order())}});
  if (!normal) return report;
  auto [q, proj] = quotient(c, image);
  rec.expect("quotient abelian", q.is_abelian(), "G(x)H / i(H(x)H) is not abelian", {},
             {{"quotient_order", str(q.order())}, {"quotient_invariants", abelian_invariants(q).to_string()}});
  return report;
}

VerificationReport verify_lemma26_sequence(const std::string& name, const Subgroup& g, const Subgroup& h,
                                           const TensorLimits& limits) {
  VerificationReport report;
  Recorder rec(report, "lemma26_sequence", name);
  const PermGroup& k = g.ambient();
  if (!g.is_normal() || !h.is_normal()) {
    rec.fail("preconditions", "both subgroups must be normal in the common group");
    return report;
  }
  rec.guard("construction", [&] {
    Subgroup d = intersection(g, h);
    TensorGroup t = tensor_product(conjugation_mutual(k, g, h), limits);
    TensorGroup l1 = tensor_product(conjugation_mutual(k, d, h), limits);
    TensorGroup l2 = tensor_product(conjugation_mutual(k, g, d), limits);
    const std::size_t nd = d.order();
    const std::size_t nh = h.order();
    std::vector<Elem> img1, img2;
    for (std::size_t s = 0; s < nd * nh; ++s)
      img1.push_back(t.pair(g.local(d.ambient_of(static_cast<Elem>(s / nh))), static_cast<Elem>(s % nh)));
    for (std::size_t s = 0; s < g.order() * nd; ++s)
      img2.push_back(t.pair(static_cast<Elem>(s / nd), h.local(d.ambient_of(static_cast<Elem>(s % nd)))));
    GroupHom alpha1 = GroupHom::from_generator_images(l1.carrier, t.carrier, std::move(img1));
    GroupHom alpha2 = GroupHom::from_generator_images(l2.carrier, t.carrier, std::move(img2));

    auto [gbar, pi_g] = quotient(g.as_group(), restrict_to(g, d));
    auto [hbar, pi_h] = quotient(h.as_group(), restrict_to(h, d));
    bool trivial = true;
    for (Elem x = 0; x < g.order() && trivial; ++x)
      for (Elem y = 0; y < h.order() && trivial; ++y) {
        Elem xa = g.ambient_of(x);
        Elem ya = h.ambient_of(y);
        trivial = pi_h(h.local(k.conjugate(xa, ya))) == pi_h(y) && pi_g(g.local(k.conjugate(ya, xa))) == pi_g(x);
      }
    rec.expect("induced actions trivial", trivial, "conjugation does not descend to trivial actions");

    TensorGroup r = tensor_product(make_mutual(Action::trivial(gbar, hbar), Action::trivial(hbar, gbar)), limits);
    std::vector<Elem> beta_images;
    for (std::size_t s = 0; s < g.order() * nh; ++s)
      beta_images.push_back(r.pair(pi_g(static_cast<Elem>(s / nh)), pi_h(static_cast<Elem>(s % nh))));
    GroupHom beta = GroupHom::from_generator_images(t.carrier, r.carrier, std::move(beta_images));

    std::vector<Fact> orders{{"left_orders", str(l1.carrier.order()) + "," + str(l2.carrier.order())},
                             {"middle_order", str(t.carrier.order())},
                             {"right_order", str(r.carrier.order())}};
    rec.expect("right map onto", beta.is_surjective(), "G(x)H -> quotient tensor is not surjective", {},
               std::move(orders));

    std::optional<std::vector<std::uint64_t>> nontrivial;
    for (Elem x = 0; x < l1.carrier.order() && !nontrivial; ++x)
      if (beta(alpha1(x)) != PermGroup::identity()) nontrivial = {{1, x}};
    for (Elem x = 0; x < l2.carrier.order() && !nontrivial; ++x)
      if (beta(alpha2(x)) != PermGroup::identity()) nontrivial = {{2, x}};
    rec.expect("composite trivial", !nontrivial, "composite is nontrivial at (factor, element)",
               nontrivial.value_or(std::vector<std::uint64_t>{}));

    // Image of the external product (x, y) -> alpha1(x) alpha2(y).
    Subgroup im1 = alpha1.image();
    Subgroup im2 = alpha2.image();
    std::vector<Elem> product;
    for (Elem a : im1.elements())
      for (Elem b : im2.elements()) product.push_back(t.carrier.mul(a, b));
    std::sort(product.begin(), product.end());
    product.erase(std::unique(product.begin(), product.end()), product.end());
    Subgroup ker = beta.kernel();
    auto same = [&](std::span<const Elem> members) { return std::ranges::equal(product, members); };
    bool product_is_join = same(join(im1, im2).elements());
    rec.expect("image = kernel", same(ker.elements()), "image of the left map differs from ker of the right map",
               {}, {{"kernel_order", str(ker.order())}, {"product_equals_join", product_is_join ? "yes" : "no"}});

    AbelianInvariants expected = trivial_action_tensor(gbar, hbar);
    AbelianInvariants got = abelian_invariants(r.carrier);
    rec.expect("quotient tensor = abelian tensor", r.carrier.is_abelian() && got == expected,
               "quotient tensor " + got.to_string() + " differs from " + expected.to_string(), {},
               {{"invariants", got.to_string()}});
  });
  return report;
}

VerificationReport verify_circ_kernels(const std::string& name, const MutualActions& ma) {
  VerificationReport report;
  Recorder rec(report, "circ_kernels", name);
  if (!ma.certified) {
    rec.skip("construction", "actions are not compatible");
    return report;
  }
  rec.guard("construction", [&] {
    CircProduct circ = circ_product(ma);
    Subgroup kmu = circ.mu.kernel();
    Subgroup knu = circ.nu.kernel();
    rec.pass("construction", {{"circ_order", str(circ.group.order())},
                              {"ker_mu_order", str(kmu.order())},
                              {"ker_nu_order", str(knu.order())},
                              {"peiffer_closure_needed", circ.peiffer.closure_needed ? "yes" : "no"}});
    rec.expect("ker mu abelian", kmu.as_group().is_abelian(), "ker mu is not abelian");
    rec.expect("ker nu abelian", knu.as_group().is_abelian(), "ker nu is not abelian");
    std::optional<std::vector<std::uint64_t>> bad_mu, bad_nu;
    for (Elem x : kmu.elements())
      for (Elem y = 0; y < ma.h().order() && !bad_mu; ++y)
        if (ma.g_on_h(x, y) != y) bad_mu = {{x, y}};
    for (Elem y : knu.elements())
      for (Elem x = 0; x < ma.g().order() && !bad_nu; ++x)
        if (ma.h_on_g(y, x) != x) bad_nu = {{y, x}};
    rec.expect("ker mu acts trivially on H", !bad_mu, "acts nontrivially at (k, h)",
               bad_mu.value_or(std::vector<std::uint64_t>{}));
    rec.expect("ker nu acts trivially on G", !bad_nu, "acts nontrivially at (k, g)",
               bad_nu.value_or(std::vector<std::uint64_t>{}));
    for (auto [label, hom, act] : {std::tuple{"mu crossed module", &circ.mu, &circ.on_g},
                                   std::tuple{"nu crossed module", &circ.nu, &circ.on_h}}) {
      if (auto v = check_crossed_module(*hom, *act))
        rec.fail(label, "axiom " + str(v->axiom) + " fails", {v->first, v->second});
      else
        rec.pass(label);
    }
  });
  return report;
}

VerificationReport verify_schur_epimorphism(const CorpusExtension& e, const TensorLimits& limits) {
  VerificationReport report;
  Recorder rec(report, "schur_epimorphism", e.name);
  const PermGroup& g = e.group;
  const Subgroup& n = e.kernel;
  Subgroup z = center(g);
  auto outside = std::find_if(n.elements().begin(), n.elements().end(), [&](Elem x) { return !z.contains(x); });
  if (outside != n.elements().end()) {
    rec.fail("central kernel", "kernel element is not central", {*outside});
    return report;
  }
  rec.pass("central kernel");
  rec.guard("construction", [&] {
    auto [h, pi] = quotient(g, n);
    TensorGroup gg = tensor_square(g, limits);
    TensorGroup hh = tensor_square(h, limits);
    Subgroup comm_g = commutator_subgroup(g);
    Subgroup comm_h = commutator_subgroup(h);

    std::vector<Elem> xgens;
    for (Elem a : n.elements())
      for (Elem b = 0; b < g.order(); ++b) {
        xgens.push_back(gg.pair(a, b));
        xgens.push_back(gg.pair(b, a));
      }
    Subgroup x = subgroup_generated(gg.carrier, xgens);
    rec.expect("X normal", x.is_normal(), "image of N(x)G and G(x)N is not normal", {},
               {{"x_order", str(x.order())}, {"tensor_order_g", str(gg.carrier.order())},
                {"tensor_order_h", str(hh.carrier.order())}, {"commutator_order", str(comm_g.order())}});
    if (!x.is_normal()) return;

    GroupHom lambda = lambda_hom(gg);
    rec.expect("lambda(X) = 1", x.is_subset_of(lambda.kernel()), "lambda is nontrivial on X");

    // theta: (g (x) g') X -> pi(g) (x) pi(g'), checked on every Cayley edge.
    auto [q, qproj] = quotient(gg.carrier, x);
    std::vector<Elem> theta_images;
    for (std::size_t s = 0; s < g.order() * g.order(); ++s)
      theta_images.push_back(hh.pair(pi(static_cast<Elem>(s / g.order())), pi(static_cast<Elem>(s % g.order()))));
    GroupHom theta = GroupHom::from_generator_images(q, hh.carrier, std::move(theta_images));
    rec.expect("theta isomorphism", theta.is_injective() && theta.is_surjective(), "theta is not bijective");

    // lambda*: h (x) h' -> [g, g'] for lifts g, g'.
    std::vector<Elem> lift(h.order(), 0);
    for (Elem a = static_cast<Elem>(g.order()); a-- > 0;) lift[pi(a)] = a;
    const std::size_t nh = h.order();
    std::vector<Elem> star_images;
    for (std::size_t s = 0; s < nh * nh; ++s)
      star_images.push_back(comm_g.local(g.commutator(lift[s / nh], lift[s % nh])));
    GroupHom star = GroupHom::from_generator_images(hh.carrier, comm_g.as_group(), std::move(star_images));
    rec.expect("lambda* onto [G,G]", star.is_surjective(), "lambda* is not surjective");

    bool factors = true;
    for (Elem t = 0; t < gg.carrier.order() && factors; ++t) factors = star(theta(qproj(t))) == lambda(t);
    rec.expect("lambda = lambda* theta", factors, "lambda does not factor through theta");

    // pi restricted to [G,G] composed with lambda* equals lambda for H.
    GroupHom lambda_h = lambda_hom(hh);
    std::optional<std::vector<std::uint64_t>> bad;
    for (Elem t = 0; t < hh.carrier.order() && !bad; ++t)
      if (pi(comm_g.ambient_of(star(t))) != comm_h.ambient_of(lambda_h(t))) bad = {{t}};
    rec.expect("diagram commutes", !bad, "square into [H,H] fails at tensor element",
               bad.value_or(std::vector<std::uint64_t>{}));
  });
  return report;
}

VerificationReport verify_schur_classes(const std::string& name, const PermGroup& g) {
  VerificationReport report;
  Recorder rec(report, "schur_classes", name);
  Subgroup z = center(g);
  const std::size_t index = g.order() / z.order();
  const std::size_t comm = commutator_subgroup(g).order();
  rec.pass("finite", {{"center_index", str(index)}, {"commutator_order", str(comm)}});
  std::uint64_t p = 0;
  if (index == 1) {
    rec.expect("p-group", comm == 1, "abelian group with nontrivial commutator subgroup");
  } else if (is_prime_power(index, p)) {
    rec.expect("p-group", is_power_of(comm, p), "[G,G] is not a " + str(p) + "-group", {}, {{"p", str(p)}});
  } else {
    rec.skip("p-group", "G/Z(G) is not a p-group");
  }
  return report;
}

VerificationReport verify_derivative_lcs(const std::string& name, const PermGroup& g) {
  VerificationReport report;
  Recorder rec(report, "derivative_lcs", name);
  std::vector<Subgroup> series = lower_central_series(g);
  Subgroup whole = Subgroup::whole(g);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const Subgroup& term = series[i];
    const Subgroup& next = i + 1 < series.size() ? series[i + 1] : series[i];
    std::string n = str(i + 1);
    Subgroup d1 = lift(term, derivative(Action::conjugation(whole, term)));
    Subgroup d2 = lift(whole, derivative(Action::conjugation(term, whole)));
    rec.expect("D_G(gamma_" + n + ") = gamma_" + str(i + 2), d1 == next, "subgroups differ", {},
               {{"order", str(d1.order())}});
    rec.expect("D_gamma_" + n + "(G) = gamma_" + str(i + 2), d2 == next, "subgroups differ", {},
               {{"order", str(d2.order())}});
  }
  return report;
}

VerificationReport run_corpus(const Corpus& corpus, const std::vector<std::string>& suites,
                              const VerifyConfig& config) {
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw InvalidArgument("unknown suite: " + s);
  auto selected = [&](const std::string& s) {
    return suites.empty() || std::find(suites.begin(), suites.end(), s) != suites.end();
  };
  VerificationReport report;
  report.config = {{"max_cosets", str(config.limits.enumeration.max_cosets)},
                   {"element_bound", str(config.limits.element_bound)},
                   {"bar_bound", str(config.bar_bound)},
                   {"pair_bound", str(config.pair_bound)}};

  if (selected("compatibility"))
    for (const auto& p : corpus.action_pairs) report.append(verify_compatibility(p));

  std::vector<std::pair<std::string, MutualActions>> compatible;
  if (selected("tensor_product") || selected("circ_kernels"))
    for (const auto& p : corpus.action_pairs) {
      MutualActions ma = make_mutual(p.g_on_h, p.h_on_g);
      if (ma.certified) compatible.emplace_back(p.name, std::move(ma));
    }
  if (selected("tensor_product"))
    for (const auto& [name, ma] : compatible) report.append(verify_tensor_product(name, ma, config));
  if (selected("tensor_square"))
    for (const auto& g : corpus.groups) report.append(verify_tensor_square(g.name, g.group, config));

  if (selected("bjr_identities") || selected("normal_abelian_quotient"))
    for (const auto& g : corpus.groups) {
      if (g.group.order() > config.pair_bound) continue;
      for (const auto& h : normal_subgroups(g.group)) {
        std::string name = g.name + "," + subgroup_label(g.name, h);
        NormalPairTensors p = normal_pair_tensors(h, config.limits);
        if (selected("bjr_identities")) report.append(verify_bjr_identities(name, p));
        if (selected("normal_abelian_quotient")) report.append(verify_normal_abelian_quotient(name, p));
      }
    }

  if (selected("lemma26_sequence"))
    for (const auto& t : corpus.triples) report.append(verify_lemma26_sequence(t.name, t.g, t.h, config.limits));
  if (selected("circ_kernels"))
    for (const auto& [name, ma] : compatible) report.append(verify_circ_kernels(name, ma));
  if (selected("schur_epimorphism"))
    for (const auto& e : corpus.extensions) report.append(verify_schur_epimorphism(e, config.limits));
  if (selected("schur_classes"))
    for (const auto& g : corpus.groups) report.append(verify_schur_classes(g.name, g.group));
  if (selected("derivative_lcs"))
    for (const auto& g : corpus.groups) report.append(verify_derivative_lcs(g.name, g.group));

  // Group cases by suite in canonical suite order.
  std::stable_sort(report.cases.begin(), report.cases.end(), [](const CaseResult& a, const CaseResult& b) {
    auto rank = [](const std::string& s) {
      return std::find(suite_names().begin(), suite_names().end(), s) - suite_names().begin();
    };
    return rank(a.suite) < rank(b.suite);
  });
  return report;
}

}  // namespace nabt
