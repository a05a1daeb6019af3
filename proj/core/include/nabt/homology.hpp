#pragma once

#include <cstddef>
#include <vector>

#include "nabt/abelian.hpp"
#include "nabt/perm_group.hpp"
#include "nabt/smith.hpp"

namespace nabt {

inline constexpr std::size_t kDefaultBarBound = 16;

/// Boundary d_n: C_n -> C_{n-1} of the normalized bar complex for n = 1, 2, 3,
/// with basis the tuples of non-identity elements in lexicographic order.
/// Row i is the image of basis tuple i (so the image is the row space).
///   d1[g]     = 0
///   d2[g|h]   = [h] - [gh] + [g]
///   d3[g|h|k] = [h|k] - [gh|k] + [g|hk] - [g|h]
IntMatrix bar_boundary(const PermGroup& g, int degree);

/// H2(G; Z) = ker d2 / im d3. Throws BoundExceeded(bar_bound) when |G| is
/// larger than `bar_bound`.
AbelianInvariants h2_bar_resolution(const PermGroup& g, std::size_t bar_bound = kDefaultBarBound);

/// A finitely generated abelian group Z^r x C_{d_1} x ... with basis
/// ordered free generators first, then the torsion generators.
struct ModuleAction {
  AbelianInvariants module;
  /// One square matrix per generator of H, acting on coordinate columns.
  std::vector<IntMatrix> generator_matrices;
};

/// A (x)_{ZH} I(H): coinvariants of the diagonal H-action on A (x)_Z I(H),
/// with I(H) free on {h - 1 : h != 1}. Throws InvalidArgument if the
/// matrices do not define an H-action on A.
AbelianInvariants module_tensor_aug_ideal(const ModuleAction& a, const PermGroup& h);

/// A (x)_Z B.
AbelianInvariants abelian_tensor(const AbelianInvariants& a, const AbelianInvariants& b);

/// G_ab (x)_Z H_ab, the tensor product for trivial mutual actions.
AbelianInvariants trivial_action_tensor(const PermGroup& g, const PermGroup& h);

}  // namespace nabt
