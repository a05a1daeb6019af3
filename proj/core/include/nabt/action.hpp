#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nabt/perm_group.hpp"
#include "nabt/subgroup.hpp"

namespace nabt {

/// A left action of `actor` on `target` by automorphisms, tabulated on
/// every pair: table[a][t] is the index of ^a t in the target.
class Action {
 public:
  /// Throws InvalidAction unless the table is a left action by automorphisms.
  Action(PermGroup actor, PermGroup target, std::vector<std::vector<Elem>> table);

  static Action trivial(const PermGroup& actor, const PermGroup& target);
  /// Actor generator i sends target generator j to images[i][j].
  static Action from_generator_images(const PermGroup& actor, const PermGroup& target,
                                      const std::vector<std::vector<Elem>>& images);
  /// Conjugation inside the common ambient group of two subgroups;
  /// requires `target` to be normalized by `actor`.
  static Action conjugation(const Subgroup& actor, const Subgroup& target);

  const PermGroup& actor() const noexcept { return actor_; }
  const PermGroup& target() const noexcept { return target_; }
  Elem operator()(Elem a, Elem t) const { return table_[a][t]; }
  std::span<const Elem> automorphism(Elem a) const { return table_[a]; }
  bool is_trivial() const;

  /// Why `table` fails to be an action by automorphisms, if it does.
  static std::optional<std::string> defect(const PermGroup& actor, const PermGroup& target,
                                           const std::vector<std::vector<Elem>>& table);

 private:
  PermGroup actor_;
  PermGroup target_;
  std::vector<std::vector<Elem>> table_;
};

/// Same element list in the same canonical order.
bool same_elements(const PermGroup& a, const PermGroup& b);

/// A failing instance of one of the two compatibility equations
///   (1)  ^(^h g) h'  =  ^h ^g ^(h^-1) h'
///   (2)  ^(^g h) g'  =  ^g ^h ^(g^-1) g'
/// where `other` is h' for equation 1 and g' for equation 2.
struct CompatibilityViolation {
  int equation = 0;
  Elem g = 0;
  Elem h = 0;
  Elem other = 0;
  Elem lhs = 0;
  Elem rhs = 0;
  std::string to_string() const;
  friend bool operator==(const CompatibilityViolation&, const CompatibilityViolation&) = default;
};

/// G acting on H and H acting on G, with a compatibility certificate.
struct MutualActions {
  Action g_on_h;
  Action h_on_g;
  bool certified = false;
  std::optional<CompatibilityViolation> violation;

  const PermGroup& g() const noexcept { return g_on_h.actor(); }
  const PermGroup& h() const noexcept { return g_on_h.target(); }
};

/// Pairs two actions and runs the exhaustive compatibility check.
MutualActions make_mutual(Action g_on_h, Action h_on_g);

/// First failing compatibility instance in canonical order (equation 1
/// before 2, then lexicographic in (g, h, other)), or nullopt.
std::optional<CompatibilityViolation> check_compatible(const Action& g_on_h, const Action& h_on_g);
inline std::optional<CompatibilityViolation> check_compatible(const MutualActions& ma) {
  return check_compatible(ma.g_on_h, ma.h_on_g);
}

/// Re-evaluates a violation record; true when it is a genuine failure.
bool replay(const Action& g_on_h, const Action& h_on_g, const CompatibilityViolation& v);

/// G and H normal in K acting on each other by conjugation in K. The
/// certificate is set without an exhaustive check. Throws NotNormal.
MutualActions conjugation_mutual(const PermGroup& k, const Subgroup& g, const Subgroup& h);

}  // namespace nabt
