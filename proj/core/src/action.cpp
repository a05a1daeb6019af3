#include "nabt/action.hpp"

#include <sstream>

#include "nabt/errors.hpp"
#include "nabt/hom.hpp"

namespace nabt {

bool same_elements(const PermGroup& a, const PermGroup& b) {
  if (a.same_as(b)) return true;
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  auto x = a.elements();
  auto y = b.elements();
  return std::equal(x.begin(), x.end(), y.begin());
}

std::optional<std::string> Action::defect(const PermGroup& actor, const PermGroup& target,
                                          const std::vector<std::vector<Elem>>& table) {
  const std::size_t na = actor.order();
  const std::size_t nt = target.order();
  if (table.size() != na) return "table needs one row per actor element";
  for (Elem a = 0; a < na; ++a) {
    if (table[a].size() != nt) return "row " + std::to_string(a) + " has the wrong length";
    std::vector<bool> hit(nt, false);
    for (Elem t : table[a]) {
      if (t >= nt || hit[t]) return "row " + std::to_string(a) + " is not a bijection";
      hit[t] = true;
    }
  }
  for (Elem t = 0; t < nt; ++t)
    if (table[PermGroup::identity()][t] != t) return "identity does not act trivially";
  auto target_gens = target.generator_elements();
  for (Elem a = 0; a < na; ++a)
    for (Elem t = 0; t < nt; ++t)
      for (Elem s : target_gens)
        if (table[a][target.mul(t, s)] != target.mul(table[a][t], table[a][s]))
          return "actor element " + actor.element(a).to_cycle_string() + " is not an automorphism";
  auto actor_gens = actor.generator_elements();
  for (Elem a = 0; a < na; ++a)
    for (Elem s : actor_gens) {
      Elem as = actor.mul(a, s);
      for (Elem t = 0; t < nt; ++t)
        if (table[as][t] != table[a][table[s][t]])
          return "table is not a left action at actor element " + actor.element(a).to_cycle_string();
    }
  return std::nullopt;
}

Action::Action(PermGroup actor, PermGroup target, std::vector<std::vector<Elem>> table)
    : actor_(std::move(actor)), target_(std::move(target)), table_(std::move(table)) {
  if (auto why = defect(actor_, target_, table_)) throw InvalidAction(*why);
}

Action Action::trivial(const PermGroup& actor, const PermGroup& target) {
  std::vector<Elem> row(target.order());
  for (std::size_t i = 0; i < row.size(); ++i) row[i] = static_cast<Elem>(i);
  return Action(actor, target, std::vector<std::vector<Elem>>(actor.order(), row));
}

Action Action::from_generator_images(const PermGroup& actor, const PermGroup& target,
                                     const std::vector<std::vector<Elem>>& images) {
  if (images.size() != actor.generators().size())
    throw InvalidAction("need one automorphism per actor generator");
  std::vector<std::vector<Elem>> autos;
  for (const auto& imgs : images) {
    GroupHom f = [&] {
      try {
        return GroupHom::from_generator_images(target, target, imgs);
      } catch (const Error& e) {
        throw InvalidAction(std::string("generator image is not an endomorphism: ") + e.what());
      }
    }();
    if (!f.is_injective()) throw InvalidAction("generator image is not an automorphism");
    autos.emplace_back(f.table().begin(), f.table().end());
  }
  // ^(x s) t = ^x (^s t), filled along the Cayley graph of the actor.
  std::vector<std::vector<Elem>> table(actor.order());
  std::vector<Elem> id(target.order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Elem>(i);
  table[PermGroup::identity()] = id;
  for (Elem x : actor.cayley_order()) {
    if (x == PermGroup::identity()) continue;
    auto [parent, via] = actor.cayley_parent(x);
    std::vector<Elem> row(target.order());
    for (Elem t = 0; t < target.order(); ++t) row[t] = table[parent][autos[via][t]];
    table[x] = std::move(row);
  }
  return Action(actor, target, std::move(table));
}

Action Action::conjugation(const Subgroup& actor, const Subgroup& target) {
  const PermGroup& k = actor.ambient();
  if (!k.same_as(target.ambient())) throw InvalidArgument("subgroups of different ambient groups");
  std::vector<std::vector<Elem>> table(actor.order(), std::vector<Elem>(target.order()));
  for (Elem a = 0; a < actor.order(); ++a)
    for (Elem t = 0; t < target.order(); ++t) {
      Elem img = k.conjugate(actor.ambient_of(a), target.ambient_of(t));
      if (!target.contains(img)) throw NotNormal("conjugate " + k.element(img).to_cycle_string() +
                                                 " leaves the target subgroup");
      table[a][t] = target.local(img);
    }
  return Action(actor.as_group(), target.as_group(), std::move(table));
}

bool Action::is_trivial() const {
  for (const auto& row : table_)
    for (Elem t = 0; t < row.size(); ++t)
      if (row[t] != t) return false;
  return true;
}

std::string CompatibilityViolation::to_string() const {
  std::ostringstream out;
  out << "equation " << equation << " fails at g=" << g << " h=" << h
      << (equation == 1 ? " h'=" : " g'=") << other << " (lhs " << lhs << ", rhs " << rhs << ")";
  return out.str();
}

namespace {

struct CompatEval {
  const Action& gh;
  const Action& hg;

  // ^(^h g) h'  versus  ^h ^g ^(h^-1) h'
  std::pair<Elem, Elem> first(Elem g, Elem h, Elem h2) const {
    const PermGroup& hh = gh.target();
    Elem lhs = gh(hg(h, g), h2);
    Elem rhs = hh.conjugate(h, gh(g, hh.conjugate(hh.inv(h), h2)));
    return {lhs, rhs};
  }
  // ^(^g h) g'  versus  ^g ^h ^(g^-1) g'
  std::pair<Elem, Elem> second(Elem g, Elem h, Elem g2) const {
    const PermGroup& gg = gh.actor();
    Elem lhs = hg(gh(g, h), g2);
    Elem rhs = gg.conjugate(g, hg(h, gg.conjugate(gg.inv(g), g2)));
    return {lhs, rhs};
  }
};

void check_pairing(const Action& g_on_h, const Action& h_on_g) {
  if (!same_elements(g_on_h.actor(), h_on_g.target()) || !same_elements(g_on_h.target(), h_on_g.actor()))
    throw InvalidArgument("mutual actions do not share their groups");
}

}  // namespace

std::optional<CompatibilityViolation> check_compatible(const Action& g_on_h, const Action& h_on_g) {
  check_pairing(g_on_h, h_on_g);
  CompatEval eval{g_on_h, h_on_g};
  const Elem ng = static_cast<Elem>(g_on_h.actor().order());
  const Elem nh = static_cast<Elem>(g_on_h.target().order());
  for (Elem g = 0; g < ng; ++g)
    for (Elem h = 0; h < nh; ++h)
      for (Elem h2 = 0; h2 < nh; ++h2) {
        auto [lhs, rhs] = eval.first(g, h, h2);
        if (lhs != rhs) return CompatibilityViolation{1, g, h, h2, lhs, rhs};
      }
  for (Elem g = 0; g < ng; ++g)
    for (Elem h = 0; h < nh; ++h)
      for (Elem g2 = 0; g2 < ng; ++g2) {
        auto [lhs, rhs] = eval.second(g, h, g2);
        if (lhs != rhs) return CompatibilityViolation{2, g, h, g2, lhs, rhs};
      }
  return std::nullopt;
}

bool replay(const Action& g_on_h, const Action& h_on_g, const CompatibilityViolation& v) {
  CompatEval eval{g_on_h, h_on_g};
  auto [lhs, rhs] = v.equation == 1 ? eval.first(v.g, v.h, v.other) : eval.second(v.g, v.h, v.other);
  return lhs != rhs && lhs == v.lhs && rhs == v.rhs;
}

MutualActions make_mutual(Action g_on_h, Action h_on_g) {
  auto v = check_compatible(g_on_h, h_on_g);
  return MutualActions{std::move(g_on_h), std::move(h_on_g), !v.has_value(), v};
}

MutualActions conjugation_mutual(const PermGroup& k, const Subgroup& g, const Subgroup& h) {
  if (!g.ambient().same_as(k) || !h.ambient().same_as(k))
    throw InvalidArgument("subgroups must live in the given overgroup");
  for (const Subgroup* s : {&g, &h})
    for (Elem a : k.generator_elements())
      for (Elem x : s->generators())
        if (!s->contains(k.conjugate(a, x)))
          throw NotNormal("subgroup is not normal: conjugating " + k.element(x).to_cycle_string() +
                          " by " + k.element(a).to_cycle_string() + " leaves it");
  return MutualActions{Action::conjugation(g, h), Action::conjugation(h, g), true, std::nullopt};
}

}  // namespace nabt
