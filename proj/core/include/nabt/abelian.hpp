#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nabt/perm_group.hpp"
#include "nabt/smith.hpp"

namespace nabt {

/// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ... and every di >= 2.
struct AbelianInvariants {
  std::vector<std::uint64_t> torsion;
  std::uint64_t free_rank = 0;

  /// Torsion subgroup order.
  std::uint64_t torsion_order() const;
  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  /// e.g. "Z^2 x C2 x C6", "1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariants of Z^cols / (row space of `relations`).
AbelianInvariants invariants_from_relations(const IntMatrix& relations);

/// Invariant factors of an arbitrary list of cyclic orders (0 means Z).
AbelianInvariants invariants_from_cyclic_orders(const std::vector<std::uint64_t>& orders);

/// Invariants of G/[G,G], from a relation matrix on the images of the
/// generators of G.
AbelianInvariants abelian_invariants(const PermGroup& g);

/// Cheap structural summary. Equal fingerprints mean "consistent with
/// isomorphism"; only for abelian groups is equality an isomorphism proof.
struct Fingerprint {
  std::size_t order = 0;
  AbelianInvariants abelianization;
  std::size_t center_order = 0;
  std::size_t derived_length = 0;  // number of strict steps to the stable term
  bool solvable = false;
  std::map<std::size_t, std::size_t> order_histogram;

  std::string to_string() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PermGroup& g);

}  // namespace nabt
