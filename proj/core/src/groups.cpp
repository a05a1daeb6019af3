#include "nabt/groups.hpp"

#include <cctype>

#include "nabt/errors.hpp"

namespace nabt::groups {

namespace {

Perm cycle_perm(std::size_t degree, std::vector<Point> cycle) {
  return Perm::from_cycles(degree, {std::move(cycle)});
}

std::vector<Point> range(std::size_t from, std::size_t to) {
  std::vector<Point> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(static_cast<Point>(i));
  return out;
}

}  // namespace

PermGroup cyclic(std::size_t n, std::size_t bound) {
  if (n == 0) throw InvalidArgument("cyclic group of order 0");
  if (n == 1) return PermGroup::trivial(1, bound);
  return PermGroup(n, {cycle_perm(n, range(0, n))}, bound);
}

PermGroup dihedral(std::size_t n, std::size_t bound) {
  if (n < 3) throw InvalidArgument("dihedral group needs at least 3 vertices");
  std::vector<std::vector<Point>> reflection;
  for (std::size_t i = 1; i < n - i; ++i)
    reflection.push_back({static_cast<Point>(i), static_cast<Point>(n - i)});
  return PermGroup(n, {cycle_perm(n, range(0, n)), Perm::from_cycles(n, reflection)}, bound);
}

PermGroup symmetric(std::size_t n, std::size_t bound) {
  if (n == 1) return PermGroup::trivial(1, bound);
  if (n == 2) return PermGroup(2, {cycle_perm(2, {0, 1})}, bound);
  return PermGroup(n, {cycle_perm(n, {0, 1}), cycle_perm(n, range(0, n))}, bound);
}

PermGroup alternating(std::size_t n, std::size_t bound) {
  if (n < 3) return PermGroup::trivial(n == 0 ? 1 : n, bound);
  std::vector<Perm> gens;
  for (std::size_t k = 2; k < n; ++k) gens.push_back(cycle_perm(n, {0, 1, static_cast<Point>(k)}));
  return PermGroup(n, std::move(gens), bound);
}

PermGroup klein_four(std::size_t bound) {
  return PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                   bound);
}

PermGroup quaternion(std::size_t bound) {
  return PermGroup(8,
                   {Perm::from_cycles(8, {{0, 1, 3, 6}, {2, 5, 7, 4}}),
                    Perm::from_cycles(8, {{0, 2, 3, 7}, {1, 4, 6, 5}})},
                   bound);
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t n = g.degree() + h.degree();
  std::vector<Perm> gens;
  for (const auto& p : g.generators()) {
    std::vector<Point> images(p.images().begin(), p.images().end());
    for (std::size_t i = g.degree(); i < n; ++i) images.push_back(static_cast<Point>(i));
    gens.emplace_back(std::move(images));
  }
  for (const auto& p : h.generators()) {
    std::vector<Point> images = range(0, g.degree());
    for (Point x : p.images()) images.push_back(static_cast<Point>(x + g.degree()));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens), std::max(g.element_bound(), h.element_bound()));
}

std::optional<PermGroup> by_name(const std::string& raw, std::size_t bound) {
  std::string name;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) name.push_back(ch == 'X' ? 'x' : ch);
  auto x = name.find('x');
  if (x != std::string::npos) {
    auto left = by_name(name.substr(0, x), bound);
    auto right = by_name(name.substr(x + 1), bound);
    if (!left || !right) return std::nullopt;
    return direct_product(*left, *right);
  }
  if (name == "V4") return klein_four(bound);
  if (name == "Q8") return quaternion(bound);
  if (name.size() < 2) return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  std::size_t n = std::stoul(name.substr(1));
  switch (name[0]) {
    case 'C': return n >= 1 ? std::optional(cyclic(n, bound)) : std::nullopt;
    case 'D': return n >= 3 ? std::optional(dihedral(n, bound)) : std::nullopt;
    case 'S': return n >= 1 ? std::optional(symmetric(n, bound)) : std::nullopt;
    case 'A': return n >= 1 ? std::optional(alternating(n, bound)) : std::nullopt;
    default: return std::nullopt;
  }
}

}  // namespace nabt::groups
