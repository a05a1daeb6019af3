#include "nabt/corpus.hpp"

#include <algorithm>

#include "nabt/errors.hpp"
#include "nabt/groups.hpp"

namespace nabt {

namespace {

const char* const kCorpusNames[] = {"C2", "C3", "C4", "C5", "C6", "C8", "C12", "V4",
                                    "C2xC4", "S3", "D4", "Q8", "A4", "D6", "C3xC3"};

constexpr std::size_t kPairBound = 12;

Subgroup first_normal(const PermGroup& g, std::size_t order, bool cyclic) {
  for (const auto& n : normal_subgroups(g)) {
    if (n.order() != order) continue;
    bool is_cyclic = std::any_of(n.elements().begin(), n.elements().end(),
                                 [&](Elem x) { return g.element_order(x) == order; });
    if (is_cyclic == cyclic) return n;
  }
  throw InternalError("corpus: missing normal subgroup");
}

Action inversion(const PermGroup& c2, const PermGroup& cn) {
  Elem gen = cn.generator_elements().front();
  return Action::from_generator_images(c2, cn, {{cn.inv(gen)}});
}

}  // namespace

CorpusExtension make_extension(std::string name, const PermGroup& group, const Subgroup& kernel) {
  Subgroup z = center(group);
  for (Elem n : kernel.elements())
    if (!z.contains(n)) throw NotCentral("extension kernel element " + std::to_string(n) + " is not central");
  return CorpusExtension{std::move(name), group, kernel};
}

std::string subgroup_label(const std::string& group_name, const Subgroup& s) {
  if (s.order() == s.ambient().order()) return group_name;
  if (s.is_trivial()) return "1";
  auto normals = normal_subgroups(s.ambient());
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (normals[i] == s) return "N" + std::to_string(i);
  return "S" + std::to_string(s.order());
}

const CorpusGroup* Corpus::find(std::string_view name) const {
  for (const auto& g : groups)
    if (g.name == name) return &g;
  return nullptr;
}

Corpus Corpus::standard() {
  Corpus c;
  for (const char* name : kCorpusNames) c.groups.push_back({name, *groups::by_name(name)});
  auto group = [&](const char* name) { return c.find(name)->group; };

  for (const char* name : {"Q8", "D4", "C3xS3"}) {
    PermGroup g = *groups::by_name(name);
    c.extensions.push_back(make_extension(std::string(name) + "/Z", g, center(g)));
  }
  {
    PermGroup s3 = group("S3");
    c.extensions.push_back(make_extension("S3/1", s3, Subgroup::trivial(s3)));
  }

  // Conjugation between G and each normal subgroup, both directions.
  for (const auto& [name, g] : c.groups) {
    if (g.order() > kPairBound) continue;
    Subgroup whole = Subgroup::whole(g);
    for (const auto& n : normal_subgroups(g)) {
      std::string label = name + "," + subgroup_label(name, n);
      c.action_pairs.push_back(
          {"conj(" + label + ")", Action::conjugation(whole, n), Action::conjugation(n, whole), true});
    }
  }
  for (std::size_t n : {3, 4, 5, 6}) {
    PermGroup c2 = groups::cyclic(2);
    PermGroup cn = groups::cyclic(n);
    c.action_pairs.push_back({"inv(C2,C" + std::to_string(n) + ")", inversion(c2, cn), Action::trivial(cn, c2), true});
  }
  const char* abelian[] = {"C2", "C3", "C4", "C6", "V4", "C2xC4"};
  for (const char* a : abelian)
    for (const char* b : abelian) {
      PermGroup g = group(a);
      PermGroup h = group(b);
      c.action_pairs.push_back({"triv(" + std::string(a) + "," + b + ")", Action::trivial(g, h), Action::trivial(h, g), true});
    }
  {
    PermGroup s3 = group("S3");
    Subgroup whole = Subgroup::whole(s3);
    c.action_pairs.push_back({"mixed(S3,S3)", Action::conjugation(whole, whole), Action::trivial(s3, s3), false});
  }

  auto triple = [&](const char* k, const Subgroup& g, const Subgroup& h) {
    c.triples.push_back({std::string(k) + ";" + subgroup_label(k, g) + ";" + subgroup_label(k, h), g, h});
  };
  {
    PermGroup d4 = group("D4");
    triple("D4", first_normal(d4, 4, true), center(d4));
    triple("D4", first_normal(d4, 4, true), first_normal(d4, 4, false));
  }
  for (const char* k : {"C4", "S3", "Q8", "A4"}) {
    PermGroup g = group(k);
    triple(k, Subgroup::whole(g), Subgroup::whole(g));
  }
  {
    PermGroup c6 = group("C6");
    triple("C6", first_normal(c6, 2, true), first_normal(c6, 3, true));
  }
  {
    PermGroup s3 = group("S3");
    triple("S3", Subgroup::whole(s3), first_normal(s3, 3, true));
  }
  {
    PermGroup a4 = group("A4");
    triple("A4", first_normal(a4, 4, false), Subgroup::whole(a4));
  }
  {
    PermGroup q8 = group("Q8");
    auto normals = normal_subgroups(q8);
    std::vector<Subgroup> fours;
    for (const auto& n : normals)
      if (n.order() == 4) fours.push_back(n);
    triple("Q8", fours.at(0), fours.at(1));
  }
  {
    PermGroup d6 = group("D6");
    triple("D6", first_normal(d6, 6, true), first_normal(d6, 6, false));
  }
  return c;
}

}  // namespace nabt
