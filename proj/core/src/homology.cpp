#include "nabt/homology.hpp"

#include "nabt/errors.hpp"

namespace nabt {

namespace {

// Index of a tuple of non-identity elements, each stored as elem - 1.
std::size_t tuple_index(std::initializer_list<Elem> xs, std::size_t m) {
  std::size_t i = 0;
  for (Elem x : xs) i = i * m + (x - 1);
  return i;
}

}  // namespace

IntMatrix bar_boundary(const PermGroup& g, int degree) {
  const std::size_t m = g.order() - 1;
  const Elem e = PermGroup::identity();
  switch (degree) {
    case 1:
      return IntMatrix(m, 1);
    case 2: {
      IntMatrix d(m * m, m);
      for (Elem a = 1; a <= m; ++a)
        for (Elem b = 1; b <= m; ++b) {
          std::size_t r = tuple_index({a, b}, m);
          d(r, b - 1) += 1;
          if (Elem ab = g.mul(a, b); ab != e) d(r, ab - 1) -= 1;
          d(r, a - 1) += 1;
        }
      return d;
    }
    case 3: {
      IntMatrix d(m * m * m, m * m);
      for (Elem a = 1; a <= m; ++a)
        for (Elem b = 1; b <= m; ++b)
          for (Elem c = 1; c <= m; ++c) {
            std::size_t r = tuple_index({a, b, c}, m);
            d(r, tuple_index({b, c}, m)) += 1;
            if (Elem ab = g.mul(a, b); ab != e) d(r, tuple_index({ab, c}, m)) -= 1;
            if (Elem bc = g.mul(b, c); bc != e) d(r, tuple_index({a, bc}, m)) += 1;
            d(r, tuple_index({a, b}, m)) -= 1;
          }
      return d;
    }
    default:
      throw InvalidArgument("bar boundary degree must be 1, 2 or 3");
  }
}

AbelianInvariants h2_bar_resolution(const PermGroup& g, std::size_t bar_bound) {
  if (g.order() > bar_bound) throw BoundExceeded(bar_bound, "bar bound");
  if (g.order() == 1) return {};
  const std::size_t n2 = (g.order() - 1) * (g.order() - 1);
  auto rank_of = [](const std::vector<BigInt>& diag) {
    std::size_t r = 0;
    for (const auto& d : diag) r += d != 0;
    return r;
  };
  std::size_t rank2 = rank_of(smith_diagonal(bar_boundary(g, 2)));
  auto diag3 = smith_diagonal(bar_boundary(g, 3));
  std::size_t rank3 = rank_of(diag3);
  AbelianInvariants inv;
  // Torsion of C2 / im d3 lies in ker d2 because C2 / ker d2 embeds in C1.
  for (const auto& d : diag3)
    if (d > 1) inv.torsion.push_back(static_cast<std::uint64_t>(d));
  inv.free_rank = n2 - rank2 - rank3;
  return inv;
}

namespace {

std::size_t module_rank(const AbelianInvariants& a) { return a.free_rank + a.torsion.size(); }

// Modulus of coordinate i (0 for free coordinates).
BigInt coordinate_modulus(const AbelianInvariants& a, std::size_t i) {
  return i < a.free_rank ? BigInt(0) : BigInt(a.torsion[i - a.free_rank]);
}

bool congruent(const AbelianInvariants& a, const IntMatrix& x, const IntMatrix& y) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    BigInt mod = coordinate_modulus(a, i);
    for (std::size_t j = 0; j < x.cols(); ++j) {
      BigInt diff = x(i, j) - y(i, j);
      if (mod == 0 ? diff != 0 : diff % mod != 0) return false;
    }
  }
  return true;
}

// Matrices for every element of H, checked to form a well-defined action.
std::vector<IntMatrix> element_matrices(const ModuleAction& a, const PermGroup& h) {
  const std::size_t k = module_rank(a.module);
  const std::size_t ngens = h.generators().size();
  if (a.generator_matrices.size() != ngens)
    throw InvalidArgument("expected one action matrix per generator of H");
  for (const auto& m : a.generator_matrices) {
    if (m.rows() != k || m.cols() != k) throw InvalidArgument("action matrix has the wrong shape");
    // Torsion relations must map into the relation lattice.
    for (std::size_t j = a.module.free_rank; j < k; ++j) {
      IntMatrix col(k, 1);
      for (std::size_t i = 0; i < k; ++i) col(i, 0) = m(i, j) * coordinate_modulus(a.module, j);
      if (!congruent(a.module, col, IntMatrix(k, 1)))
        throw InvalidArgument("action matrix does not preserve the torsion relations");
    }
  }
  std::vector<IntMatrix> mats(h.order());
  mats[PermGroup::identity()] = IntMatrix::identity(k);
  // Left action: M(x s) = M(x) M(s).
  for (Elem x : h.cayley_order()) {
    if (x == PermGroup::identity()) continue;
    auto [parent, via] = h.cayley_parent(x);
    mats[x] = mats[parent] * a.generator_matrices[via];
  }
  for (Elem x = 0; x < h.order(); ++x)
    for (std::size_t s = 0; s < ngens; ++s)
      if (!congruent(a.module, mats[x] * a.generator_matrices[s], mats[h.mul_generator(x, s)]))
        throw InvalidArgument("action matrices violate a relation of H");
  return mats;
}

}  // namespace

AbelianInvariants module_tensor_aug_ideal(const ModuleAction& a, const PermGroup& h) {
  const std::size_t k = module_rank(a.module);
  const std::size_t m = h.order() - 1;
  auto mats = element_matrices(a, h);
  if (k == 0 || m == 0) return {};
  const Elem e = PermGroup::identity();
  auto col = [&](std::size_t i, Elem b) { return i * m + (b - 1); };
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = a.module.free_rank; i < k; ++i)
    for (Elem b = 1; b <= m; ++b) {
      std::vector<BigInt> r(k * m);
      r[col(i, b)] = coordinate_modulus(a.module, i);
      rows.push_back(std::move(r));
    }
  // e_i (x) b_x - (M_s e_i) (x) (s . b_x), with s . b_x = b_{sx} - b_s.
  for (Elem s = 1; s < h.order(); ++s)
    for (std::size_t i = 0; i < k; ++i)
      for (Elem x = 1; x <= m; ++x) {
        std::vector<BigInt> r(k * m);
        r[col(i, x)] += 1;
        Elem sx = h.mul(s, x);
        for (std::size_t j = 0; j < k; ++j) {
          const BigInt& c = mats[s](j, i);
          if (c == 0) continue;
          if (sx != e) r[col(j, sx)] -= c;
          r[col(j, s)] += c;
        }
        rows.push_back(std::move(r));
      }
  IntMatrix rel(rows.size(), k * m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < k * m; ++c) rel(r, c) = rows[r][c];
  return invariants_from_relations(rel);
}

AbelianInvariants abelian_tensor(const AbelianInvariants& a, const AbelianInvariants& b) {
  const std::size_t ka = module_rank(a);
  const std::size_t kb = module_rank(b);
  if (ka == 0 || kb == 0) return {};
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < kb; ++j) {
      BigInt ma = coordinate_modulus(a, i);
      BigInt mb = coordinate_modulus(b, j);
      for (const BigInt& d : {ma, mb}) {
        if (d == 0) continue;
        std::vector<BigInt> r(ka * kb);
        r[i * kb + j] = d;
        rows.push_back(std::move(r));
      }
    }
  IntMatrix rel(rows.size(), ka * kb);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ka * kb; ++c) rel(r, c) = rows[r][c];
  return invariants_from_relations(rel);
}

AbelianInvariants trivial_action_tensor(const PermGroup& g, const PermGroup& h) {
  return abelian_tensor(abelian_invariants(g), abelian_invariants(h));
}

}  // namespace nabt
