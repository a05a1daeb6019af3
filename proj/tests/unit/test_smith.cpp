#include <functional>
#include <random>

#include "doctest.h"
#include "nabt/abelian.hpp"
#include "nabt/smith.hpp"

using namespace nabt;

namespace {

// Oracle: the k-th determinantal divisor is the gcd of all k x k minors;
// invariant factors are quotients of consecutive divisors.
std::vector<BigInt> determinantal_oracle(const IntMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<BigInt> divisors{1};
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt g = 0;
    std::vector<std::size_t> rs(k), cs(k);
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t,
                       std::function<void()>)>
        choose = [&](std::size_t start, std::size_t depth, std::vector<std::size_t>& pick,
                     std::size_t limit, std::function<void()> leaf) {
          if (depth == pick.size()) return leaf();
          for (std::size_t i = start; i < limit; ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1, pick, limit, leaf);
          }
        };
    choose(0, 0, rs, m.rows(), [&] {
      choose(0, 0, cs, m.cols(), [&] {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        g = gcd(g, abs(determinant(sub)));
      });
    });
    divisors.push_back(g);
  }
  std::vector<BigInt> factors;
  for (std::size_t k = 1; k <= n; ++k)
    factors.push_back(divisors[k] == 0 ? BigInt(0) : divisors[k] / divisors[k - 1]);
  return factors;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form: fixed examples") {
  auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.diagonal == std::vector<BigInt>{1, 1, 1});

  IntMatrix m(2, 2, {2, 4, 6, 8});
  auto s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<BigInt>{2, 4});
  CHECK(verify_smith_form(m, s));
  CHECK(determinantal_oracle(m) == s.diagonal);

  IntMatrix zero(2, 3);
  auto z = smith_normal_form(zero);
  CHECK(z.diagonal == std::vector<BigInt>{0, 0});
  CHECK(verify_smith_form(zero, z));

  // diag(4, 6) is not in chain form; SNF is diag(2, 12).
  IntMatrix d(2, 2, {4, 0, 0, 6});
  CHECK(smith_normal_form(d).diagonal == std::vector<BigInt>{2, 12});
  CHECK(smith_diagonal(d) == std::vector<BigInt>{2, 12});
}

TEST_CASE("property: transforms reproduce the diagonal and match determinantal divisors") {
  std::mt19937 rng(20241019);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4;
    std::size_t c = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c, trial % 2 ? 3 : 12);
    if (trial % 7 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);  // rank deficiency
    auto s = smith_normal_form(m);
    CHECK(verify_smith_form(m, s));
    CHECK(s.diagonal == determinantal_oracle(m));
    CHECK(smith_diagonal(m) == s.diagonal);
  }
}

TEST_CASE("entry growth stays exact") {
  // Large entries exceed 64 bits in intermediate products.
  IntMatrix m(2, 2);
  m(0, 0) = BigInt("123456789012345678901234567");
  m(0, 1) = BigInt("987654321098765432109876543");
  m(1, 0) = BigInt("192837465564738291019283746");
  m(1, 1) = BigInt("111111111111111111111111113");
  auto s = smith_normal_form(m);
  CHECK(verify_smith_form(m, s));
  CHECK(s.diagonal == determinantal_oracle(m));
}

TEST_CASE("abelian invariants from relations") {
  // Z^3 / <(2,0,0), (0,4,0)> = Z + C2 + C4
  IntMatrix rel(2, 3, {2, 0, 0, 0, 4, 0});
  auto inv = invariants_from_relations(rel);
  CHECK(inv.torsion == std::vector<std::uint64_t>{2, 4});
  CHECK(inv.free_rank == 1);
  CHECK(inv.to_string() == "Z x C2 x C4");
  CHECK(invariants_from_cyclic_orders({4, 6}) == AbelianInvariants{{2, 12}, 0});
  CHECK(invariants_from_cyclic_orders({3, 1, 0}) == AbelianInvariants{{3}, 1});
}
