#include "nabt/constructions.hpp"

#include <sstream>

#include "nabt/errors.hpp"

namespace nabt {

namespace {
constexpr Elem kUnset = static_cast<Elem>(-1);
}

SemidirectProduct::SemidirectProduct(const Action& h_on_g)
    : g_(h_on_g.target()), h_(h_on_g.actor()), group_(PermGroup::trivial()) {
  const std::size_t ng = g_.order();
  const std::size_t nh = h_.order();
  const std::size_t points = ng * nh;
  auto right_mul = [&](Elem x, Elem y) {
    std::vector<Point> images(points);
    for (Elem g = 0; g < ng; ++g)
      for (Elem h = 0; h < nh; ++h)
        images[g * nh + h] = static_cast<Point>(g_.mul(g, h_on_g(h, x)) * nh + h_.mul(h, y));
    return Perm(std::move(images));
  };
  std::vector<Perm> gens;
  for (Elem x : g_.generator_elements()) gens.push_back(right_mul(x, PermGroup::identity()));
  for (Elem y : h_.generator_elements()) gens.push_back(right_mul(PermGroup::identity(), y));
  group_ = PermGroup(points, std::move(gens), std::max(g_.element_bound(), h_.element_bound()));
  if (group_.order() != points) throw InternalError("semidirect product has the wrong order");
  pair_.resize(points);
  split_.resize(points);
  for (Elem g = 0; g < ng; ++g)
    for (Elem h = 0; h < nh; ++h) {
      // The right regular image of (g, h) sends the point (1, 1) to (g, h).
      Elem e = group_.index_of(right_mul(g, h));
      pair_[g * nh + h] = e;
      split_[e] = {g, h};
    }
}

GroupHom SemidirectProduct::embedding_g() const {
  std::vector<Elem> images;
  for (Elem x : g_.generator_elements()) images.push_back(pair(x, PermGroup::identity()));
  return GroupHom::from_generator_images(g_, group_, std::move(images));
}

GroupHom SemidirectProduct::embedding_h() const {
  std::vector<Elem> images;
  for (Elem y : h_.generator_elements()) images.push_back(pair(PermGroup::identity(), y));
  return GroupHom::from_generator_images(h_, group_, std::move(images));
}

SemidirectProduct semidirect_product(const Action& h_on_g) { return SemidirectProduct(h_on_g); }

PeifferSubgroup peiffer_subgroup(const SemidirectProduct& sdp, const MutualActions& ma) {
  const PermGroup& g = sdp.g();
  const PermGroup& h = sdp.h();
  std::vector<Elem> gens;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < h.order(); ++y) {
      Elem first = g.mul(x, g.inv(ma.h_on_g(y, x)));
      Elem second = h.mul(y, h.inv(ma.g_on_h(x, y)));
      gens.push_back(sdp.pair(first, second));
    }
  Subgroup generated = subgroup_generated(sdp.group(), gens);
  Subgroup closed = normal_closure(sdp.group(), gens);
  return PeifferSubgroup{closed, generated != closed};
}

CircProduct circ_product(const MutualActions& ma) {
  if (!ma.certified) throw InvalidArgument("circ product needs compatible actions");
  SemidirectProduct sdp(ma.h_on_g);
  PeifferSubgroup peiffer = peiffer_subgroup(sdp, ma);
  auto [group, projection] = quotient(sdp.group(), peiffer.subgroup);
  GroupHom mu = sdp.embedding_g().then(projection);
  GroupHom nu = sdp.embedding_h().then(projection);

  const PermGroup& g = sdp.g();
  const PermGroup& h = sdp.h();
  std::vector<std::vector<Elem>> on_g(group.order(), std::vector<Elem>(g.order(), kUnset));
  std::vector<std::vector<Elem>> on_h(group.order(), std::vector<Elem>(h.order(), kUnset));
  for (Elem x = 0; x < sdp.group().order(); ++x) {
    auto [a, b] = sdp.split(x);
    Elem q = projection(x);
    for (Elem t = 0; t < g.order(); ++t) {
      Elem img = g.conjugate(a, ma.h_on_g(b, t));
      if (on_g[q][t] != kUnset && on_g[q][t] != img)
        throw InternalError("induced action on G depends on the coset representative");
      on_g[q][t] = img;
    }
    for (Elem t = 0; t < h.order(); ++t) {
      Elem img = ma.g_on_h(a, h.conjugate(b, t));
      if (on_h[q][t] != kUnset && on_h[q][t] != img)
        throw InternalError("induced action on H depends on the coset representative");
      on_h[q][t] = img;
    }
  }
  Action act_g(group, g, std::move(on_g));
  Action act_h(group, h, std::move(on_h));
  return CircProduct{std::move(sdp), std::move(peiffer), group, std::move(projection),
                     std::move(mu),  std::move(nu),      std::move(act_g), std::move(act_h)};
}

Subgroup derivative(const Action& h_on_g) {
  const PermGroup& g = h_on_g.target();
  std::vector<Elem> gens;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < h_on_g.actor().order(); ++y) gens.push_back(g.mul(x, g.inv(h_on_g(y, x))));
  return subgroup_generated(g, gens);
}

std::string CrossedModuleViolation::to_string() const {
  std::ostringstream out;
  out << "crossed-module axiom " << axiom << " fails at (" << first << ", " << second << ")";
  return out.str();
}

std::optional<CrossedModuleViolation> check_crossed_module(const GroupHom& boundary, const Action& g_on_m) {
  const PermGroup& m = boundary.domain();
  const PermGroup& g = boundary.codomain();
  if (!same_elements(g_on_m.actor(), g) || !same_elements(g_on_m.target(), m))
    throw InvalidArgument("action does not match the boundary map");
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < m.order(); ++y)
      if (boundary(g_on_m(x, y)) != g.conjugate(x, boundary(y))) return CrossedModuleViolation{1, x, y};
  for (Elem y = 0; y < m.order(); ++y)
    for (Elem z = 0; z < m.order(); ++z)
      if (g_on_m(boundary(y), z) != m.conjugate(y, z)) return CrossedModuleViolation{2, y, z};
  return std::nullopt;
}

}  // namespace nabt
