#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nabt/perm_group.hpp"
#include "nabt/subgroup.hpp"

namespace nabt {

/// A homomorphism between permutation groups, tabulated on every element.
class GroupHom {
 public:
  /// Extends generator images along the Cayley graph of `domain` and checks
  /// every edge. Throws NotAHomomorphism naming a domain relator (a closed
  /// Cayley-graph loop, as a word in domain generators) whose image is not
  /// the identity.
  static GroupHom from_generator_images(PermGroup domain, PermGroup codomain,
                                        std::vector<Elem> generator_images);
  static GroupHom identity(const PermGroup& g);
  /// Inclusion of a subgroup into its ambient group.
  static GroupHom inclusion(const Subgroup& s);

  const PermGroup& domain() const noexcept { return domain_; }
  const PermGroup& codomain() const noexcept { return codomain_; }
  Elem operator()(Elem e) const { return images_[e]; }
  std::span<const Elem> table() const noexcept { return images_; }

  Subgroup kernel() const;
  Subgroup image() const;
  bool is_injective() const;
  bool is_surjective() const;

  /// `after` applied to the output of `this`.
  GroupHom then(const GroupHom& after) const;

 private:
  GroupHom(PermGroup domain, PermGroup codomain, std::vector<Elem> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {}

  PermGroup domain_;
  PermGroup codomain_;
  std::vector<Elem> images_;
};

/// G/N as a permutation group on the cosets of N, with the projection.
/// Throws NotNormal when N is not normal in G.
std::pair<PermGroup, GroupHom> quotient(const PermGroup& g, const Subgroup& n);

}  // namespace nabt
