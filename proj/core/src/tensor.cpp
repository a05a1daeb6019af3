#include "nabt/tensor.hpp"

#include <algorithm>

#include "nabt/errors.hpp"
#include "nabt/subgroup.hpp"

namespace nabt {

TensorPresentation tensor_presentation(const MutualActions& ma) {
  if (!ma.certified) throw InvalidArgument("tensor product needs compatible actions");
  const PermGroup& g = ma.g();
  const PermGroup& h = ma.h();
  TensorPresentation tp;
  tp.g_order = g.order();
  tp.h_order = h.order();
  std::vector<std::string> names;
  names.reserve(tp.g_order * tp.h_order);
  for (Elem x = 0; x < tp.g_order; ++x)
    for (Elem y = 0; y < tp.h_order; ++y) names.push_back("t" + std::to_string(x) + "_" + std::to_string(y));
  auto sym = [&](Elem x, Elem y, int e) { return Letter{tp.symbol(x, y), static_cast<std::int8_t>(e)}; };
  std::vector<Word> relators;
  relators.reserve(tp.g_order * tp.g_order * tp.h_order + tp.g_order * tp.h_order * tp.h_order);
  // (^g g' (x) ^g h)(g (x) h)(g g' (x) h)^-1
  for (Elem x = 0; x < tp.g_order; ++x)
    for (Elem x2 = 0; x2 < tp.g_order; ++x2)
      for (Elem y = 0; y < tp.h_order; ++y)
        relators.emplace_back(std::vector<Letter>{sym(g.conjugate(x, x2), ma.g_on_h(x, y), 1), sym(x, y, 1),
                                                  sym(g.mul(x, x2), y, -1)});
  // (g (x) h)(^h g (x) ^h h')(g (x) h h')^-1
  for (Elem x = 0; x < tp.g_order; ++x)
    for (Elem y = 0; y < tp.h_order; ++y)
      for (Elem y2 = 0; y2 < tp.h_order; ++y2)
        relators.emplace_back(std::vector<Letter>{sym(x, y, 1), sym(ma.h_on_g(y, x), h.conjugate(y, y2), 1),
                                                  sym(x, h.mul(y, y2), -1)});
  tp.fp = FpGroup(std::move(names), std::move(relators));
  return tp;
}

std::vector<RelationViolation> audit_relations(const TensorGroup& t) {
  const PermGroup& g = t.g();
  const PermGroup& h = t.h();
  const PermGroup& c = t.carrier;
  const auto& ma = t.actions;
  std::vector<RelationViolation> out;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem x2 = 0; x2 < g.order(); ++x2)
      for (Elem y = 0; y < h.order(); ++y)
        if (t.pair(g.mul(x, x2), y) != c.mul(t.pair(g.conjugate(x, x2), ma.g_on_h(x, y)), t.pair(x, y)))
          out.push_back({1, x, x2, y});
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < h.order(); ++y)
      for (Elem y2 = 0; y2 < h.order(); ++y2)
        if (t.pair(x, h.mul(y, y2)) != c.mul(t.pair(x, y), t.pair(ma.h_on_g(y, x), h.conjugate(y, y2))))
          out.push_back({2, x, y, y2});
  return out;
}

namespace {

// Carrier automorphisms induced by an action on both factors.
Action induced_action(const PermGroup& actor, const PermGroup& carrier, const std::vector<Elem>& pairing,
                      std::size_t h_order, auto&& act_g, auto&& act_h) {
  std::vector<std::vector<Elem>> images;
  for (Elem x : actor.generator_elements()) {
    std::vector<Elem> row;
    row.reserve(pairing.size());
    for (std::size_t s = 0; s < pairing.size(); ++s) {
      Elem a = static_cast<Elem>(s / h_order);
      Elem b = static_cast<Elem>(s % h_order);
      row.push_back(pairing[act_g(x, a) * h_order + act_h(x, b)]);
    }
    images.push_back(std::move(row));
  }
  return Action::from_generator_images(actor, carrier, images);
}

}  // namespace

TensorGroup tensor_product(const MutualActions& ma, const TensorLimits& limits) {
  TensorPresentation tp = tensor_presentation(ma);
  CosetTable table = todd_coxeter(tp.fp, {}, limits.enumeration);
  FpRealization real = perm_rep(table, tp.fp, limits.element_bound);
  const PermGroup& g = ma.g();
  const PermGroup& h = ma.h();
  const std::size_t nh = h.order();

  std::vector<Elem> phi_images;
  for (std::size_t s = 0; s < real.generator_images.size(); ++s) {
    Elem a = static_cast<Elem>(s / nh);
    Elem b = static_cast<Elem>(s % nh);
    phi_images.push_back(g.mul(a, g.inv(ma.h_on_g(b, a))));
  }
  GroupHom phi = [&] {
    try {
      return GroupHom::from_generator_images(real.group, g, std::move(phi_images));
    } catch (const NotAHomomorphism& e) {
      throw InternalError(std::string("phi is not well defined: ") + e.what());
    }
  }();

  Action g_action = induced_action(
      g, real.group, real.generator_images, nh, [&](Elem x, Elem a) { return g.conjugate(x, a); },
      [&](Elem x, Elem b) { return ma.g_on_h(x, b); });
  Action h_action = induced_action(
      h, real.group, real.generator_images, nh, [&](Elem y, Elem a) { return ma.h_on_g(y, a); },
      [&](Elem y, Elem b) { return h.conjugate(y, b); });

  TensorGroup t{ma, real.group, real.generator_images, std::move(phi), std::move(g_action), std::move(h_action),
                table.cosets_defined()};
  if (!audit_relations(t).empty()) throw InternalError("tensor carrier violates a defining relation");
  return t;
}

TensorGroup tensor_square(const PermGroup& g, const TensorLimits& limits) {
  Subgroup whole = Subgroup::whole(g);
  return tensor_product(conjugation_mutual(g, whole, whole), limits);
}

bool is_tensor_square(const TensorGroup& t) {
  const PermGroup& g = t.g();
  if (!same_elements(g, t.h())) return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (t.actions.g_on_h(x, y) != g.conjugate(x, y) || t.actions.h_on_g(x, y) != g.conjugate(x, y))
        return false;
  return true;
}

GroupHom lambda_hom(const TensorGroup& t) {
  if (!is_tensor_square(t)) throw InvalidArgument("lambda is defined on tensor squares only");
  const PermGroup& g = t.g();
  Subgroup comm = commutator_subgroup(g);
  const std::size_t n = g.order();
  std::vector<Elem> images;
  for (std::size_t s = 0; s < t.pairing.size(); ++s)
    images.push_back(comm.local(g.commutator(static_cast<Elem>(s / n), static_cast<Elem>(s % n))));
  return GroupHom::from_generator_images(t.carrier, comm.as_group(), std::move(images));
}

Subgroup nabla(const TensorGroup& t) {
  if (!same_elements(t.g(), t.h())) throw InvalidArgument("nabla needs G = H");
  std::vector<Elem> diag;
  for (Elem x = 0; x < t.g().order(); ++x) diag.push_back(t.pair(x, x));
  return normal_closure(t.carrier, diag);
}

ExteriorSquare exterior_square(TensorGroup square) {
  GroupHom lambda = lambda_hom(square);
  Subgroup diag = nabla(square);
  if (!diag.is_subset_of(lambda.kernel())) throw InternalError("nabla is not contained in ker lambda");
  auto [wedge, projection] = quotient(square.carrier, diag);
  // Wedge generator i is the image of carrier generator i.
  std::vector<Elem> images;
  for (Elem s : square.carrier.generator_elements()) images.push_back(lambda(s));
  GroupHom kappa = GroupHom::from_generator_images(wedge, lambda.codomain(), std::move(images));
  if (!kappa.is_surjective()) throw InternalError("kappa is not onto [G, G]");
  return ExteriorSquare{std::move(square), std::move(diag), std::move(wedge), std::move(projection),
                        std::move(kappa)};
}

ExteriorSquare exterior_square(const PermGroup& g, const TensorLimits& limits) {
  return exterior_square(tensor_square(g, limits));
}

DirectExterior exterior_square_direct(const PermGroup& g, const TensorLimits& limits) {
  Subgroup whole = Subgroup::whole(g);
  TensorPresentation tp = tensor_presentation(conjugation_mutual(g, whole, whole));
  std::vector<Word> relators = tp.fp.relators();
  for (Elem x = 0; x < g.order(); ++x) relators.push_back(Word::power(tp.symbol(x, x), 1));
  FpGroup fp(tp.fp.generator_names(), std::move(relators));
  CosetTable table = todd_coxeter(fp, {}, limits.enumeration);
  FpRealization real = perm_rep(table, fp, limits.element_bound);
  Subgroup comm = commutator_subgroup(g);
  const std::size_t n = g.order();
  std::vector<Elem> images;
  for (std::size_t s = 0; s < real.generator_images.size(); ++s)
    images.push_back(comm.local(g.commutator(static_cast<Elem>(s / n), static_cast<Elem>(s % n))));
  GroupHom kappa = GroupHom::from_generator_images(real.group, comm.as_group(), std::move(images));
  if (!kappa.is_surjective()) throw InternalError("kappa is not onto [G, G]");
  return DirectExterior{real.group, real.generator_images, std::move(kappa), table.cosets_defined()};
}

namespace {

MultiplierResult multiplier_from(const PermGroup& wedge, const GroupHom& kappa) {
  Subgroup kernel = kappa.kernel();
  MultiplierResult r;
  r.kernel_order = kernel.order();
  r.kernel_central = kernel.is_subset_of(center(wedge));
  if (!r.kernel_central) throw InternalError("ker kappa is not central in the exterior square");
  r.invariants = abelian_invariants(kernel.as_group());
  return r;
}

}  // namespace

MultiplierResult schur_multiplier_of(const ExteriorSquare& ext) { return multiplier_from(ext.group, ext.kappa); }

MultiplierResult schur_multiplier_of(const DirectExterior& ext) { return multiplier_from(ext.group, ext.kappa); }

AbelianInvariants schur_multiplier(const PermGroup& g, const TensorLimits& limits) {
  return schur_multiplier_of(exterior_square_direct(g, limits)).invariants;
}

}  // namespace nabt
