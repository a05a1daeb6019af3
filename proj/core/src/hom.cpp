#include "nabt/hom.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nabt/errors.hpp"

namespace nabt {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

std::string describe_loop(const PermGroup& g, Elem from, std::size_t gen, Elem to) {
  // word(from) * gen * word(to)^-1 is a relator of the domain.
  std::ostringstream out;
  auto letter = [&](std::size_t s, int e) { out << 'g' << s << (e < 0 ? "^-1" : "") << ' '; };
  for (std::size_t s : g.word_of(from)) letter(s, 1);
  letter(gen, 1);
  auto back = g.word_of(to);
  for (auto it = back.rbegin(); it != back.rend(); ++it) letter(*it, -1);
  std::string w = out.str();
  if (!w.empty()) w.pop_back();
  return w;
}

}  // namespace

GroupHom GroupHom::from_generator_images(PermGroup domain, PermGroup codomain,
                                         std::vector<Elem> generator_images) {
  const std::size_t k = domain.generators().size();
  if (generator_images.size() != k)
    throw InvalidArgument("need one image per domain generator");
  for (Elem e : generator_images)
    if (e >= codomain.order()) throw InvalidArgument("generator image outside codomain");
  std::vector<Elem> images(domain.order(), kUnset);
  images[PermGroup::identity()] = PermGroup::identity();
  for (Elem x : domain.cayley_order()) {
    for (std::size_t s = 0; s < k; ++s) {
      Elem y = domain.mul_generator(x, s);
      Elem expected = codomain.mul(images[x], generator_images[s]);
      if (images[y] == kUnset) {
        images[y] = expected;
      } else if (images[y] != expected) {
        throw NotAHomomorphism("relator " + describe_loop(domain, x, s, y) +
                               " does not map to the identity");
      }
    }
  }
  return GroupHom(std::move(domain), std::move(codomain), std::move(images));
}

GroupHom GroupHom::identity(const PermGroup& g) {
  std::vector<Elem> images(g.order());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Elem>(i);
  return GroupHom(g, g, std::move(images));
}

GroupHom GroupHom::inclusion(const Subgroup& s) {
  std::vector<Elem> images(s.elements().begin(), s.elements().end());
  return GroupHom(s.as_group(), s.ambient(), std::move(images));
}

Subgroup GroupHom::kernel() const {
  std::vector<Elem> k;
  for (Elem e = 0; e < images_.size(); ++e)
    if (images_[e] == PermGroup::identity()) k.push_back(e);
  return subgroup_generated(domain_, k);
}

Subgroup GroupHom::image() const {
  std::vector<Elem> gens;
  for (Elem g : domain_.generator_elements()) gens.push_back(images_[g]);
  return subgroup_generated(codomain_, gens);
}

bool GroupHom::is_injective() const { return kernel().is_trivial(); }

bool GroupHom::is_surjective() const { return image().order() == codomain_.order(); }

GroupHom GroupHom::then(const GroupHom& after) const {
  if (after.domain_.order() != codomain_.order())
    throw InvalidArgument("composition of incompatible homomorphisms");
  std::vector<Elem> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = after.images_[images_[i]];
  return GroupHom(domain_, after.codomain_, std::move(images));
}

std::pair<PermGroup, GroupHom> quotient(const PermGroup& g, const Subgroup& n) {
  if (!n.ambient().same_as(g)) throw InvalidArgument("subgroup of a different group");
  for (Elem a : g.generator_elements())
    for (Elem x : n.generators())
      if (!n.contains(g.conjugate(a, x)))
        throw NotNormal("conjugate of " + g.element(x).to_cycle_string() + " by " +
                        g.element(a).to_cycle_string() + " leaves the subgroup");
  // Cosets xN numbered by their smallest member, in increasing order.
  std::vector<Elem> coset_of(g.order(), kUnset);
  std::size_t count = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    for (Elem m : n.elements()) coset_of[g.mul(x, m)] = static_cast<Elem>(count);
    ++count;
  }
  std::vector<Elem> rep(count);
  for (Elem x = g.order(); x-- > 0;) rep[coset_of[x]] = x;
  // Right multiplication permutes the right cosets Nx; with N normal these
  // coincide with left cosets.
  auto gens = g.generator_elements();
  std::vector<Perm> perms;
  for (Elem s : gens) {
    std::vector<Point> images(count);
    for (std::size_t c = 0; c < count; ++c) images[c] = coset_of[g.mul(rep[c], s)];
    perms.emplace_back(std::move(images));
  }
  PermGroup q(count, std::move(perms), g.element_bound());
  std::vector<Elem> gen_images;
  for (std::size_t i = 0; i < gens.size(); ++i) gen_images.push_back(q.index_of(q.generators()[i]));
  GroupHom proj = GroupHom::from_generator_images(g, q, std::move(gen_images));
  if (proj.kernel() != n) throw InternalError("quotient projection kernel differs from N");
  return {std::move(q), std::move(proj)};
}

}  // namespace nabt
