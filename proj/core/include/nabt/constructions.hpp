#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nabt/action.hpp"
#include "nabt/hom.hpp"

namespace nabt {

/// G x| H with product (g, h)(g', h') = (g ^h g', h h'), realized by right
/// multiplication on the |G||H| pairs.
class SemidirectProduct {
 public:
  explicit SemidirectProduct(const Action& h_on_g);

  const PermGroup& group() const noexcept { return group_; }
  const PermGroup& g() const noexcept { return g_; }
  const PermGroup& h() const noexcept { return h_; }

  Elem pair(Elem g, Elem h) const { return pair_[g * h_.order() + h]; }
  std::pair<Elem, Elem> split(Elem x) const { return split_[x]; }

  GroupHom embedding_g() const;
  GroupHom embedding_h() const;

 private:
  PermGroup g_;
  PermGroup h_;
  PermGroup group_;
  std::vector<Elem> pair_;
  std::vector<std::pair<Elem, Elem>> split_;
};

SemidirectProduct semidirect_product(const Action& h_on_g);

struct PeifferSubgroup {
  Subgroup subgroup;
  /// Whether the listed generators (g ^h g^-1, h ^g h^-1) fell short of a
  /// normal subgroup before closing under conjugation.
  bool closure_needed = false;
};

/// Normal closure in G x| H of all (g (^h g)^-1, h (^g h)^-1).
PeifferSubgroup peiffer_subgroup(const SemidirectProduct& sdp, const MutualActions& ma);

struct CircProduct {
  SemidirectProduct sdp;
  PeifferSubgroup peiffer;
  PermGroup group;
  GroupHom projection;
  GroupHom mu;
  GroupHom nu;
  /// ^(g, h) g' = ^g (^h g') and ^(g, h) h' = ^g (^h h').
  Action on_g;
  Action on_h;
};

/// (G x| H) / (G, H) with the natural maps from G and H. Throws
/// InvalidArgument unless `ma` is certified.
CircProduct circ_product(const MutualActions& ma);

/// D_H(G) = < g (^h g)^-1 >, a subgroup of the target of `h_on_g`.
Subgroup derivative(const Action& h_on_g);

struct CrossedModuleViolation {
  /// 1: d(^g m) = g d(m) g^-1;  2: ^(d m) m' = m m' m^-1.
  int axiom = 0;
  Elem first = 0;
  Elem second = 0;
  std::string to_string() const;
};

/// Exhaustive check of both crossed-module axioms for d: M -> G with G
/// acting on M; first failure in canonical order.
std::optional<CrossedModuleViolation> check_crossed_module(const GroupHom& boundary, const Action& g_on_m);

}  // namespace nabt
