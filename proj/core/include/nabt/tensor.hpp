#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nabt/abelian.hpp"
#include "nabt/action.hpp"
#include "nabt/coset_enum.hpp"
#include "nabt/hom.hpp"

namespace nabt {

struct TensorLimits {
  EnumLimits enumeration;
  std::size_t element_bound = kDefaultElementBound;
};

/// The presentation with one generator per symbol g (x) h and one relator
/// per instance of
///   g g' (x) h = (^g g' (x) ^g h)(g (x) h)
///   g (x) h h' = (g (x) h)(^h g (x) ^h h').
struct TensorPresentation {
  FpGroup fp;
  std::size_t g_order = 0;
  std::size_t h_order = 0;
  std::uint32_t symbol(Elem g, Elem h) const { return static_cast<std::uint32_t>(g * h_order + h); }
};

TensorPresentation tensor_presentation(const MutualActions& ma);

/// G (x) H realized as a permutation group.
struct TensorGroup {
  MutualActions actions;
  PermGroup carrier;
  /// pairing[g * |H| + h] is the carrier element g (x) h; carrier generator
  /// i is the symbol with the same index.
  std::vector<Elem> pairing;
  /// phi(g (x) h) = g (^h g)^-1, into G.
  GroupHom phi;
  /// ^x (g (x) h) = ^x g (x) ^x h for x in G, resp. x in H.
  Action g_action;
  Action h_action;
  std::size_t cosets_defined = 0;

  const PermGroup& g() const noexcept { return actions.g(); }
  const PermGroup& h() const noexcept { return actions.h(); }
  Elem pair(Elem g, Elem h) const { return pairing[g * actions.h().order() + h]; }
};

struct RelationViolation {
  int family = 0;  // 1: first relation family (g, g', h); 2: second (g, h, h')
  Elem a = 0;
  Elem b = 0;
  Elem c = 0;
  friend bool operator==(const RelationViolation&, const RelationViolation&) = default;
};

/// Checks both relation families on every tuple; violations sorted.
std::vector<RelationViolation> audit_relations(const TensorGroup& t);

/// Builds the presentation, enumerates it and attaches phi and the induced
/// actions. Throws InvalidArgument for uncertified actions, LimitExceeded,
/// BoundExceeded, or InternalError if the relation audit fails.
TensorGroup tensor_product(const MutualActions& ma, const TensorLimits& limits = {});

/// G (x) G with both actions conjugation.
TensorGroup tensor_square(const PermGroup& g, const TensorLimits& limits = {});

inline const GroupHom& phi_hom(const TensorGroup& t) { return t.phi; }

/// True when G = H and both actions are conjugation.
bool is_tensor_square(const TensorGroup& t);

/// g (x) g' -> [g, g'] onto [G, G] (as a standalone group). Throws
/// InvalidArgument unless `t` is a tensor square.
GroupHom lambda_hom(const TensorGroup& t);

/// Normal closure of the diagonal symbols g (x) g.
Subgroup nabla(const TensorGroup& t);

struct ExteriorSquare {
  TensorGroup tensor;
  Subgroup diagonal;        // nabla(G)
  PermGroup group;          // G ^ G
  GroupHom projection;      // G (x) G -> G ^ G
  GroupHom kappa;           // G ^ G -> [G, G]
};

ExteriorSquare exterior_square(const PermGroup& g, const TensorLimits& limits = {});
ExteriorSquare exterior_square(TensorGroup square);

/// G ^ G enumerated from the tensor presentation plus the relators g (x) g,
/// without building G (x) G first.
struct DirectExterior {
  PermGroup group;
  /// pairing[g * |G| + g'] is g ^ g'.
  std::vector<Elem> pairing;
  GroupHom kappa;  // G ^ G -> [G, G]
  std::size_t cosets_defined = 0;
};
DirectExterior exterior_square_direct(const PermGroup& g, const TensorLimits& limits = {});

struct MultiplierResult {
  AbelianInvariants invariants;
  std::size_t kernel_order = 0;
  bool kernel_central = false;
};

/// H2(G) as the kernel of kappa: G ^ G -> [G, G]. Throws InternalError if
/// the kernel is not central.
MultiplierResult schur_multiplier_of(const ExteriorSquare& ext);
MultiplierResult schur_multiplier_of(const DirectExterior& ext);
/// Uses the direct exterior square.
AbelianInvariants schur_multiplier(const PermGroup& g, const TensorLimits& limits = {});

}  // namespace nabt
