#include "nabt/subgroup.hpp"

#include <algorithm>
#include <set>

#include "nabt/errors.hpp"

namespace nabt {

namespace {

std::vector<Perm> perms_of(const PermGroup& g, std::span<const Elem> elems) {
  std::vector<Perm> out;
  out.reserve(elems.size());
  for (Elem e : elems) out.push_back(g.element(e));
  return out;
}

std::vector<Elem> close(const PermGroup& g, std::span<const Elem> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> members{PermGroup::identity()};
  seen[PermGroup::identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Elem s : gens) {
      Elem y = g.mul(members[head], s);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Adds `s` to the generating set when it is not yet a member.
struct Closure {
  const PermGroup& g;
  std::vector<Elem> gens;
  std::vector<Elem> members{PermGroup::identity()};
  std::vector<bool> mask;

  explicit Closure(const PermGroup& group) : g(group), mask(group.order(), false) {
    mask[PermGroup::identity()] = true;
  }

  bool add(Elem s) {
    if (mask[s]) return false;
    gens.push_back(s);
    members = close(g, gens);
    std::fill(mask.begin(), mask.end(), false);
    for (Elem m : members) mask[m] = true;
    return true;
  }

  Subgroup finish() && { return Subgroup(g, std::move(members), std::move(gens)); }
};

}  // namespace

Subgroup::Subgroup(PermGroup ambient, std::vector<Elem> members, std::vector<Elem> generators)
    : ambient_(std::move(ambient)),
      members_(std::move(members)),
      generators_(std::move(generators)),
      mask_(ambient_.order(), false),
      group_(ambient_.degree(), perms_of(ambient_, generators_), ambient_.element_bound()) {
  for (Elem m : members_) mask_[m] = true;
}

Subgroup Subgroup::whole(const PermGroup& g) {
  std::vector<Elem> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return Subgroup(g, std::move(all), g.generator_elements());
}

Subgroup Subgroup::trivial(const PermGroup& g) { return Subgroup(g, {PermGroup::identity()}, {}); }

Elem Subgroup::local(Elem ambient_elem) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), ambient_elem);
  if (it == members_.end() || *it != ambient_elem) throw InvalidArgument("element not in subgroup");
  return static_cast<Elem>(it - members_.begin());
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Elem e) { return other.contains(e); });
}

bool Subgroup::is_normal() const {
  for (Elem g : ambient_.generator_elements())
    for (Elem n : generators_)
      if (!contains(ambient_.conjugate(g, n))) return false;
  return true;
}

Subgroup subgroup_generated(const PermGroup& g, std::span<const Elem> s) {
  Closure c(g);
  for (Elem x : s) c.add(x);
  return std::move(c).finish();
}

Subgroup normal_closure(const PermGroup& g, std::span<const Elem> s) {
  Closure c(g);
  for (Elem x : s) c.add(x);
  auto ambient_gens = g.generator_elements();
  for (std::size_t i = 0; i < c.gens.size(); ++i)
    for (Elem a : ambient_gens) c.add(g.conjugate(a, c.gens[i]));
  return std::move(c).finish();
}

Subgroup center(const PermGroup& g) {
  auto gens = g.generator_elements();
  std::vector<Elem> central;
  for (Elem z = 0; z < g.order(); ++z)
    if (std::all_of(gens.begin(), gens.end(), [&](Elem s) { return g.mul(z, s) == g.mul(s, z); }))
      central.push_back(z);
  return subgroup_generated(g, central);
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const PermGroup& g = a.ambient();
  if (!g.same_as(b.ambient())) throw InvalidArgument("subgroups of different ambient groups");
  Subgroup ab = join(a, b);
  std::vector<Elem> comms;
  for (Elem x : a.elements())
    for (Elem y : b.elements()) comms.push_back(g.commutator(x, y));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  // Normal closure inside <A, B>, carried out in the ambient index space.
  Closure c(g);
  for (Elem x : comms) c.add(x);
  for (std::size_t i = 0; i < c.gens.size(); ++i)
    for (Elem t : ab.generators()) c.add(g.conjugate(t, c.gens[i]));
  return std::move(c).finish();
}

Subgroup commutator_subgroup(const PermGroup& g) {
  Subgroup whole = Subgroup::whole(g);
  return commutator_subgroup(whole, whole);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> common;
  for (Elem e : a.elements())
    if (b.contains(e)) common.push_back(e);
  return subgroup_generated(a.ambient(), common);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return subgroup_generated(a.ambient(), gens);
}

Subgroup lift(const Subgroup& sub, const Subgroup& inner) {
  std::vector<Elem> gens;
  for (Elem e : inner.generators()) gens.push_back(sub.ambient_of(e));
  return subgroup_generated(sub.ambient(), gens);
}

Subgroup restrict_to(const Subgroup& sub, const Subgroup& s) {
  std::vector<Elem> gens;
  for (Elem e : s.elements()) {
    if (!sub.contains(e)) throw InvalidArgument("subgroup is not contained in the restriction target");
    gens.push_back(sub.local(e));
  }
  return subgroup_generated(sub.as_group(), gens);
}

std::vector<Subgroup> derived_series(const PermGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  while (true) {
    Subgroup next = commutator_subgroup(series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const PermGroup& g) {
  Subgroup whole = Subgroup::whole(g);
  std::vector<Subgroup> series{whole};
  while (true) {
    Subgroup next = commutator_subgroup(whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> normal_subgroups(const PermGroup& g) {
  std::vector<Subgroup> found;
  std::set<std::vector<Elem>> seen;
  auto remember = [&](Subgroup s) {
    std::vector<Elem> key(s.elements().begin(), s.elements().end());
    if (seen.insert(key).second) found.push_back(std::move(s));
  };
  for (Elem e = 0; e < g.order(); ++e) {
    Elem one[] = {e};
    remember(normal_closure(g, one));
  }
  // Joins of normal subgroups are normal; close the list under joins.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) remember(join(found[i], found[j]));
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
  });
  return found;
}

}  // namespace nabt
