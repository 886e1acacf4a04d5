#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "catcheck/category_laws.hpp"
#include "catcheck/finset_category.hpp"
#include "catcheck/matrix_category.hpp"
#include "catcheck/ring.hpp"

using namespace catcheck;

namespace {

  // Plain long arithmetic mod p as the oracle for F_p.
  std::int64_t mod(std::int64_t a, std::int64_t p) {
    return ((a % p) + p) % p;
  }

  std::vector<std::vector<std::int64_t>> random_rows(std::mt19937_64& rng, std::size_t r,
                                                      std::size_t c, std::int64_t p) {
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    std::vector<std::vector<std::int64_t>>      out(r, std::vector<std::int64_t>(c));
    for (auto& row : out) {
      for (auto& x : row) {
        x = d(rng);
      }
    }
    return out;
  }

}  // namespace

TEST(Ring, PrimeFieldMatchesModularArithmetic) {
  for (std::int64_t p : {2, 3, 5, 7, 101}) {
    auto const f = Ring::prime_field(p);
    for (std::int64_t a = -7; a < 12; ++a) {
      for (std::int64_t b = -7; b < 12; ++b) {
        auto const x = f.from_int(a);
        auto const y = f.from_int(b);
        EXPECT_EQ(f.add(x, y), f.from_int(mod(a + b, p)));
        EXPECT_EQ(f.mul(x, y), f.from_int(mod(a * b, p)));
        EXPECT_EQ(f.sub(x, y), f.from_int(mod(a - b, p)));
      }
      if (mod(a, p) != 0) {
        EXPECT_EQ(f.mul(f.from_int(a), f.inv(f.from_int(a))), f.one());
      }
    }
  }
}

TEST(Ring, PrimalityByTrialDivision) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 60; ++n) {
    if (is_prime(n)) {
      primes.push_back(n);
    }
  }
  std::vector<std::uint64_t> const expected{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
  EXPECT_EQ(primes, expected);
  EXPECT_THROW((void)Ring::prime_field(4), Error);
}

TEST(Ring, RationalsReduceFractions) {
  auto const q = Ring::rationals();
  EXPECT_EQ(q.add(q.from_fraction(1, 2), q.from_fraction(1, 3)), q.from_fraction(5, 6));
  EXPECT_EQ(q.mul(q.from_fraction(2, 4), q.from_int(2)), q.one());
  EXPECT_EQ(q.to_string(q.from_fraction(-6, 4)), "-3/2");
}

TEST(Matrix, KroneckerIndexingIsRowMajor) {
  auto const f = Ring::prime_field(5);
  std::mt19937_64 rng(7);
  auto const a  = random_rows(rng, 2, 3, 5);
  auto const b  = random_rows(rng, 3, 2, 5);
  auto const ka = Matrix::from_rows(f, a).kronecker(Matrix::from_rows(f, b));
  ASSERT_EQ(ka.rows(), 6u);
  ASSERT_EQ(ka.cols(), 6u);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          EXPECT_EQ(ka.at(i * 3 + k, j * 2 + l), f.from_int(mod(a[i][j] * b[k][l], 5)));
        }
      }
    }
  }
}

TEST(Matrix, InverseOrKernelWitness) {
  auto const f  = Ring::prime_field(2);
  auto const m  = Matrix::from_rows(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  auto const iv = m.invert();
  ASSERT_FALSE(iv.invertible);
  auto const& w = std::get<KernelVector>(*iv.witness);
  auto const  v = m.apply(w.entries);
  bool nonzero = false;
  for (auto s : w.entries) {
    nonzero = nonzero || !f.is_zero(s);
  }
  EXPECT_TRUE(nonzero);
  for (auto s : v) {
    EXPECT_TRUE(f.is_zero(s));
  }

  auto const g  = Matrix::from_rows(f, {{1, 1}, {0, 1}});
  auto const gi = g.invert();
  ASSERT_TRUE(gi.invertible);
  EXPECT_EQ(g * *gi.inverse, Matrix::identity(f, 2));

  auto const r = Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_TRUE(std::holds_alternative<ShapeWitness>(*r.invert().witness));
}

TEST(MatrixCategory, BraidingPermutesBasis) {
  MatrixCategory c(Ring::prime_field(3));
  auto const     s = c.braiding(2, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t row = 0; row < 6; ++row) {
        EXPECT_EQ(s.at(row, i * 3 + k), row == k * 2 + i ? c.ring().one() : c.ring().zero());
      }
    }
  }
  EXPECT_TRUE(c.equal(c.compose(c.braiding(3, 2), s), c.identity(6)));
}

TEST(MatrixCategory, MonoidalLawsOnRandomPopulation) {
  MatrixCategory          c(Ring::prime_field(3));
  std::mt19937_64         rng(0x5eed);
  std::vector<std::size_t> objects{1, 2, 3};
  std::vector<Matrix>      population;
  for (auto a : objects) {
    for (auto b : objects) {
      population.push_back(Matrix::from_rows(c.ring(), random_rows(rng, b, a, 3)));
    }
    population.push_back(c.identity(a));
  }
  auto const laws = check_category_laws(c, std::span<Matrix const>(population));
  EXPECT_TRUE(laws.passed()) << laws.to_text();
  auto const mono = check_monoidal_laws(c, std::span<std::size_t const>(objects),
                                        std::span<Matrix const>(population), 4000);
  EXPECT_TRUE(mono.passed()) << mono.to_text();
}

TEST(FinSetCategory, CartesianStructure) {
  FinSetCategory c;
  auto const     f = Function::from_table(3, {2, 0});
  auto const     g = Function::from_table(2, {1, 1, 0});
  auto const     t = c.tensor(f, g);
  ASSERT_EQ(t.domain, 6u);
  ASSERT_EQ(t.codomain, 6u);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(t(i * 3 + k), f(i) * 2 + g(k));
    }
  }
  auto const d = c.diagonal(3);
  for (std::size_t x = 0; x < 3; ++x) {
    EXPECT_EQ(d(x), x * 3 + x);
  }
  EXPECT_EQ(c.hom_size(3, 2), 8u);
  EXPECT_EQ(c.enumerate_hom(3, 2).size(), 8u);
  EXPECT_THROW((void)Function::from_table(2, {0, 2}), ShapeError);
}

TEST(FinSetCategory, InvertibilityWitnesses) {
  FinSetCategory c;
  auto const     collide = c.is_invertible(Function::from_table(3, {1, 1, 0}));
  ASSERT_FALSE(collide.invertible);
  auto const& w = std::get<Collision>(*collide.witness);
  EXPECT_EQ(w.first, 0u);
  EXPECT_EQ(w.second, 1u);
  auto const perm = c.is_invertible(Function::from_table(3, {2, 0, 1}));
  ASSERT_TRUE(perm.invertible);
  EXPECT_EQ(perm.inverse->table, (std::vector<std::size_t>{1, 2, 0}));
}
