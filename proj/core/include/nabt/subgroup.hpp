#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nabt/perm_group.hpp"

namespace nabt {

/// A subgroup of a PermGroup, stored as its sorted member indices.
///
/// `as_group()` exposes the same elements as a standalone PermGroup; its
/// canonical element order matches `elements()` position by position, so
/// `local(e)` and `ambient_of(i)` translate between the two index spaces.
class Subgroup {
 public:
  /// `members` must be sorted and closed; `generators` must generate it.
  Subgroup(PermGroup ambient, std::vector<Elem> members, std::vector<Elem> generators);

  static Subgroup whole(const PermGroup& g);
  static Subgroup trivial(const PermGroup& g);

  const PermGroup& ambient() const noexcept { return ambient_; }
  std::span<const Elem> elements() const noexcept { return members_; }
  std::span<const Elem> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool contains(Elem e) const noexcept { return e < mask_.size() && mask_[e]; }

  const PermGroup& as_group() const noexcept { return group_; }
  Elem local(Elem ambient_elem) const;
  Elem ambient_of(Elem local_elem) const { return members_[local_elem]; }

  bool is_subset_of(const Subgroup& other) const;
  /// Normal in the ambient group.
  bool is_normal() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  PermGroup ambient_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<bool> mask_;
  PermGroup group_;
};

Subgroup subgroup_generated(const PermGroup& g, std::span<const Elem> s);
Subgroup normal_closure(const PermGroup& g, std::span<const Elem> s);
Subgroup center(const PermGroup& g);
/// Normal closure in <A, B> of all [a, b] = a b a^-1 b^-1.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup commutator_subgroup(const PermGroup& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

/// Lifts a subgroup of `sub.as_group()` to a subgroup of `sub.ambient()`.
Subgroup lift(const Subgroup& sub, const Subgroup& inner);
/// Restricts `s` (a subgroup of the ambient containing `sub`) to `sub.as_group()`.
Subgroup restrict_to(const Subgroup& sub, const Subgroup& s);

/// G = Γ1, Γ(i+1) = [Γi, Γi]; stops at the first repeated term, listed once.
std::vector<Subgroup> derived_series(const PermGroup& g);
/// G = γ1, γ(i+1) = [G, γi]; stops at the first repeated term, listed once.
std::vector<Subgroup> lower_central_series(const PermGroup& g);

/// Every normal subgroup, sorted by (order, members).
std::vector<Subgroup> normal_subgroups(const PermGroup& g);

}  // namespace nabt
