#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "catcheck/algebra/hopf.hpp"
#include "catcheck/algebra/linearize.hpp"
#include "catcheck/algebra/monoid.hpp"
#include "catcheck/algebra/operad_algebra.hpp"

using namespace catcheck;

namespace {

  using Table = std::vector<std::vector<std::size_t>>;

  // Monoids on {0..n-1} with unit 0, by brute force over all tables, one
  // representative per isomorphism class (smallest relabelled table).
  std::vector<Table> brute_monoids(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t a = 1; a < n; ++a) {
      for (std::size_t b = 1; b < n; ++b) {
        free.emplace_back(a, b);
      }
    }
    std::set<Table>          classes;
    std::vector<std::size_t> digits(free.size(), 0);
    while (true) {
      Table t(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        t[0][a] = t[a][0] = a;
      }
      for (std::size_t i = 0; i < free.size(); ++i) {
        t[free[i].first][free[i].second] = digits[i];
      }
      bool assoc = true;
      for (std::size_t a = 0; a < n && assoc; ++a) {
        for (std::size_t b = 0; b < n && assoc; ++b) {
          for (std::size_t c = 0; c < n && assoc; ++c) {
            assoc = t[t[a][b]][c] == t[a][t[b][c]];
          }
        }
      }
      if (assoc) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        Table best;
        do {
          if (perm[0] != 0) {
            continue;
          }
          std::vector<std::size_t> inv(n);
          for (std::size_t i = 0; i < n; ++i) {
            inv[perm[i]] = i;
          }
          Table r(n, std::vector<std::size_t>(n));
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              r[perm[a]][perm[b]] = perm[t[a][b]];
            }
          }
          if (best.empty() || r < best) {
            best = r;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
      }
      std::size_t i = 0;
      while (i < digits.size() && digits[i] == n - 1) {
        digits[i++] = 0;
      }
      if (i == digits.size()) {
        break;
      }
      ++digits[i];
    }
    return {classes.begin(), classes.end()};
  }

  // Column g of the oracle has its single 1 in row g⁻¹, found by search.
  Matrix inversion_oracle(Monoid const& m, Ring const& ring) {
    Matrix out(ring, m.order(), m.order());
    for (std::size_t g = 0; g < m.order(); ++g) {
      for (std::size_t h = 0; h < m.order(); ++h) {
        if (m(g, h) == m.unit() && m(h, g) == m.unit()) {
          out.set_int(h, g, 1);
        }
      }
    }
    return out;
  }

  std::vector<Monoid> corpus_groups() {
    return {Monoid::cyclic(2), Monoid::cyclic(3), Monoid::symmetric_group(3)};
  }

}  // namespace

TEST(Monoid, EnumerationMatchesBruteForce) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const brute = brute_monoids(n);
    auto const lib   = monoids_up_to_isomorphism(n);
    EXPECT_EQ(lib.size(), brute.size()) << "order " << n;
    std::size_t groups = 0;
    for (auto const& m : lib) {
      groups += m.is_group() ? 1 : 0;
    }
    EXPECT_EQ(groups, 1u) << "order " << n;
  }
  EXPECT_EQ(brute_monoids(3).size(), 7u);
}

TEST(Monoid, InversionOnGroupsOnly) {
  EXPECT_TRUE(Monoid::symmetric_group(3).is_group());
  EXPECT_FALSE(Monoid::idempotent().is_group());
  EXPECT_FALSE(Monoid::idempotent().inversion().has_value());
  auto const inv = *Monoid::cyclic(3).inversion();
  EXPECT_EQ(inv, (std::vector<std::size_t>{0, 2, 1}));
}

TEST(Hopf, GroupAlgebrasDeriveTheInversion) {
  for (std::uint64_t p : {2, 3, 5}) {
    auto const     ring = Ring::prime_field(p);
    MatrixCategory c(ring);
    for (auto const& g : corpus_groups()) {
      auto const b = monoid_algebra(g, ring);
      ASSERT_TRUE(check_bialgebra(c, b).passed());
      auto const d = is_hopf(c, b);
      ASSERT_TRUE(d.hopf);
      auto const alpha = antipode_from_shear(c, b);
      ASSERT_TRUE(alpha.value.has_value());
      EXPECT_EQ(*alpha.value, inversion_oracle(g, ring)) << "p=" << p;
      EXPECT_TRUE(check_antipode(c, b, *alpha.value).passed());
      auto const phi = shear_inverse_from_antipode(c, b, *alpha.value);
      EXPECT_TRUE(phi.report.passed());
      EXPECT_EQ(*phi.value, *d.right.inverse);
    }
  }
}

TEST(Hopf, RationalGroupAlgebra) {
  auto const     q = Ring::rationals();
  MatrixCategory c(q);
  auto const     b = monoid_algebra(Monoid::cyclic(3), q);
  auto const     d = is_hopf(c, b);
  ASSERT_TRUE(d.hopf);
  EXPECT_EQ(*antipode_from_shear(c, b).value, inversion_oracle(Monoid::cyclic(3), q));
}

TEST(Hopf, IdempotentMonoidHasKernelWitness) {
  auto const     ring = Ring::prime_field(2);
  MatrixCategory c(ring);
  auto const     b = monoid_algebra(Monoid::idempotent(), ring);
  ASSERT_TRUE(check_bialgebra(c, b).passed());
  auto const d = is_hopf(c, b);
  EXPECT_FALSE(d.hopf);
  EXPECT_FALSE(d.left.invertible);
  for (auto const& [inv, sh] : {std::pair{&d.right, right_shear(c, b)},
                                std::pair{&d.left, left_shear(c, b)}}) {
    auto const& w = std::get<KernelVector>(*inv->witness);
    EXPECT_TRUE(std::any_of(w.entries.begin(), w.entries.end(),
                            [&](Scalar s) { return !ring.is_zero(s); }));
    for (auto s : sh.apply(w.entries)) {
      EXPECT_TRUE(ring.is_zero(s));
    }
  }
  auto const a = antipode_from_shear(c, b);
  EXPECT_FALSE(a.value.has_value());
  EXPECT_EQ(a.report.count(Status::refused), 1u);
}

TEST(Hopf, FinSetMonoids) {
  FinSetCategory c;
  auto const     group = monoid_bialgebra(Monoid::cyclic(3));
  auto const     d     = is_hopf(c, group);
  ASSERT_TRUE(d.hopf);
  EXPECT_EQ(antipode_from_shear(c, group).value->table, (std::vector<std::size_t>{0, 2, 1}));

  auto const nat = monoid_bialgebra(Monoid::truncated_naturals(3));
  auto const dn  = is_hopf(c, nat);
  EXPECT_FALSE(dn.hopf);
  EXPECT_TRUE(std::holds_alternative<Collision>(*dn.right.witness));
}

TEST(Hopf, ShearIdentitiesHoldWithoutAntipode) {
  auto const     ring = Ring::prime_field(2);
  MatrixCategory c(ring);
  for (auto const& m : {Monoid::cyclic(2), Monoid::symmetric_group(3), Monoid::idempotent(),
                        Monoid::truncated_naturals(3)}) {
    auto const r = check_shear_identities(c, monoid_algebra(m, ring));
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

// (δ⊗id)∘sh and (sh⊗id)∘(δ⊗id) differ on F_2[C_2] at g⊗e: g⊗g⊗g versus
// g⊗e⊗e. Basis: e = 0, g = 1, x⊗y = 2x + y.
TEST(Hopf, LiteralSecondShearIdentityFails) {
  auto const     ring = Ring::prime_field(2);
  MatrixCategory c(ring);
  auto const     b   = monoid_algebra(Monoid::cyclic(2), ring);
  auto const     sh  = right_shear(c, b);
  auto const     id  = c.identity(2);
  auto const     lhs = c.compose(c.tensor(b.delta, id), sh);
  auto const     rhs = c.compose(c.tensor(sh, id), c.tensor(b.delta, id));
  EXPECT_FALSE(c.equal(lhs, rhs));
  std::size_t const ge = 1 * 2 + 0;
  for (std::size_t row = 0; row < 8; ++row) {
    EXPECT_EQ(lhs.at(row, ge), row == 7 ? ring.one() : ring.zero());
    EXPECT_EQ(rhs.at(row, ge), row == 4 ? ring.one() : ring.zero());
  }
  auto const fixed = c.compose(c.tensor(id, sh), c.tensor(b.delta, id));
  EXPECT_TRUE(c.equal(lhs, fixed));
}

TEST(OperadAlgebra, AssocOrderingsOfANoncommutativeAlgebra) {
  auto const     ring = Ring::prime_field(2);
  MatrixCategory c(ring);
  auto const     alg = monoid_algebra(Monoid::symmetric_group(3), ring).algebra();
  auto const     two = ordered_multiplication(c, alg, Word{0, 1});
  auto const     owt = ordered_multiplication(c, alg, Word{1, 0});
  EXPECT_FALSE(c.equal(two, owt));
  EXPECT_TRUE(c.equal(owt, c.compose(alg.mu, c.braiding(6, 6))));
  auto const op = OperadAlgebra<MatrixCategory>::from_algebra(c, SetOperad::assoc(3), alg);
  EXPECT_TRUE(op.check_laws(3).passed());
}

TEST(Algebra, TensorAndUnitAlgebras) {
  auto const     ring = Ring::prime_field(3);
  MatrixCategory c(ring);
  auto const     r  = monoid_algebra(Monoid::cyclic(3), ring).algebra();
  auto const     rs = tensor_algebras(c, r, r);
  EXPECT_TRUE(check_algebra(c, rs).passed());
  EXPECT_EQ(rs.carrier, 9u);
  EXPECT_TRUE(check_algebra(c, unit_algebra(c)).passed());
  auto const eps = monoid_algebra(Monoid::cyclic(3), ring).epsilon;
  EXPECT_TRUE(check_algebra_map(c, eps, r, unit_algebra(c)).passed());
}
