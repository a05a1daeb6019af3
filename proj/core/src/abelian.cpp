#include "nabt/abelian.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "nabt/errors.hpp"
#include "nabt/hom.hpp"
#include "nabt/subgroup.hpp"

namespace nabt {

std::uint64_t AbelianInvariants::torsion_order() const {
  std::uint64_t n = 1;
  for (auto d : torsion) n *= d;
  return n;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "1";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << 'Z';
    if (free_rank > 1) out << '^' << free_rank;
    first = false;
  }
  for (auto d : torsion) {
    out << (first ? "" : " x ") << 'C' << d;
    first = false;
  }
  return out.str();
}

AbelianInvariants invariants_from_relations(const IntMatrix& relations) {
  AbelianInvariants inv;
  auto diag = relations.rows() == 0 ? std::vector<BigInt>{} : smith_diagonal(relations);
  std::size_t nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) {
      if (d > std::numeric_limits<std::uint64_t>::max())
        throw InvalidArgument("invariant factor exceeds 64 bits");
      inv.torsion.push_back(static_cast<std::uint64_t>(d));
    }
  }
  inv.free_rank = relations.cols() - nonzero;
  return inv;
}

AbelianInvariants invariants_from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  IntMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
  return invariants_from_relations(rel);
}

AbelianInvariants abelian_invariants(const PermGroup& g) {
  auto [ab, proj] = quotient(g, commutator_subgroup(g));
  // Spanning tree coordinates on the abelian quotient; every Cayley edge
  // yields a relation among the generator images (Schreier generators).
  const std::size_t k = ab.generators().size();
  std::vector<std::vector<long long>> coord(ab.order(), std::vector<long long>(k, 0));
  for (Elem x : ab.cayley_order()) {
    if (x == PermGroup::identity()) continue;
    auto [parent, via] = ab.cayley_parent(x);
    coord[x] = coord[parent];
    coord[x][via] += 1;
  }
  std::vector<std::vector<long long>> rows;
  for (Elem x = 0; x < ab.order(); ++x)
    for (std::size_t s = 0; s < k; ++s) {
      Elem y = ab.mul_generator(x, s);
      std::vector<long long> r(k);
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) {
        r[i] = coord[x][i] + (i == s ? 1 : 0) - coord[y][i];
        zero = zero && r[i] == 0;
      }
      if (!zero) rows.push_back(std::move(r));
    }
  IntMatrix rel(rows.size(), k);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) rel(i, j) = rows[i][j];
  if (rows.empty()) {
    // No relations: only possible when there are no generators.
    AbelianInvariants inv;
    inv.free_rank = 0;
    if (k != 0) throw InternalError("finite abelian quotient without relations");
    return inv;
  }
  return invariants_from_relations(rel);
}

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "order=" << order << " ab=" << abelianization.to_string() << " center=" << center_order
      << " derived_length=" << derived_length << (solvable ? "" : " (non-solvable)") << " orders={";
  bool first = true;
  for (auto [o, c] : order_histogram) {
    out << (first ? "" : ",") << o << ':' << c;
    first = false;
  }
  out << '}';
  return out.str();
}

Fingerprint fingerprint(const PermGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelianization = abelian_invariants(g);
  f.center_order = center(g).order();
  auto series = derived_series(g);
  f.derived_length = series.size() - 1;
  f.solvable = series.back().is_trivial();
  for (Elem e = 0; e < g.order(); ++e) ++f.order_histogram[g.element_order(e)];
  return f;
}

}  // namespace nabt
