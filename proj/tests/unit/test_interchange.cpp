#include <gtest/gtest.h>

#include <vector>

#include "catcheck/algebra/linearize.hpp"
#include "catcheck/error.hpp"
#include "catcheck/interchange/algebra_functor.hpp"
#include "catcheck/interchange/nerve_algebra.hpp"
#include "catcheck/interchange/pairing.hpp"

using namespace catcheck;

namespace {

  auto const kF2 = Ring::prime_field(2);

  // Basis map of F[M]^{⊗n} → F[M]: g_0 ⊗ ... ⊗ g_{n-1} ↦ g_{w_0} ⋯ g_{w_{n-1}},
  // read straight off the table.
  Matrix word_oracle(Monoid const& m, Word const& w) {
    std::size_t const        n    = w.size();
    std::size_t const        q    = m.order();
    std::size_t              cols = 1;
    for (std::size_t i = 0; i < n; ++i) {
      cols *= q;
    }
    std::vector<std::size_t> image(cols);
    for (std::size_t v = 0; v < cols; ++v) {
      std::vector<std::size_t> g(n);
      auto                     rest = v;
      for (std::size_t i = n; i-- > 0;) {
        g[i] = rest % q;
        rest /= q;
      }
      auto prod = m.unit();
      for (auto letter : w) {
        prod = m(prod, g[letter]);
      }
      image[v] = prod;
    }
    return Matrix::from_function(kF2, image, q);
  }

  // ⊗_i (r_i ⊗ s_i) ↦ (∏ r_i) ⊗ (∏ s_i) for commutative R = F[M], S = F[N].
  Matrix pair_product_oracle(Monoid const& r, Monoid const& s, std::size_t k) {
    std::size_t const q = r.order() * s.order();
    std::size_t       cols = 1;
    for (std::size_t i = 0; i < k; ++i) {
      cols *= q;
    }
    std::vector<std::size_t> image(cols);
    for (std::size_t v = 0; v < cols; ++v) {
      auto        rest = v;
      std::size_t a = r.unit(), b = s.unit();
      std::vector<std::size_t> digits(k);
      for (std::size_t i = k; i-- > 0;) {
        digits[i] = rest % q;
        rest /= q;
      }
      for (auto d : digits) {
        a = r(a, d / s.order());
        b = s(b, d % s.order());
      }
      image[v] = a * s.order() + b;
    }
    return Matrix::from_function(kF2, image, q);
  }

}  // namespace

TEST(AlgebraFunctor, AssocComponentsMultiplyInWordOrder) {
  MatrixCategory c(kF2);
  auto const     s3 = Monoid::symmetric_group(3);
  auto const     f  = algebra_functor(c, monoid_algebra(s3, kF2).algebra(), 3);
  ASSERT_EQ(f.source().operad().name(), "Assoc");
  auto const& ops = f.source().operad();
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t e = 0; e < ops.size(n); ++e) {
      auto const g = f.on_morphism(f.source().make(PointedMap::fold(n), {e}));
      EXPECT_EQ(g.components.at(0), word_oracle(s3, ops.word(n, e))) << "n=" << n << " e=" << e;
    }
  }
}

TEST(AlgebraFunctor, CommFunctorialAndInert) {
  MatrixCategory c(kF2);
  auto const     f = algebra_functor(c, monoid_algebra(Monoid::cyclic(2), kF2).algebra(), 3);
  EXPECT_EQ(f.source().operad().name(), "Comm");
  auto const func = f.check_functoriality(3);
  EXPECT_TRUE(func.passed()) << func.to_text();
  auto const inert = f.check_inert_preservation(2);
  EXPECT_TRUE(inert.passed()) << inert.to_text();
}

TEST(AlgebraFunctor, NoncommutativeUsesAssoc) {
  MatrixCategory c(kF2);
  auto const     alg = monoid_algebra(Monoid::symmetric_group(3), kF2).algebra();
  EXPECT_THROW((void)comm_algebra_functor(c, alg, 2), PreconditionError);
  auto const f = assoc_algebra_functor(c, alg, 2);
  EXPECT_TRUE(f.check_functoriality(2).passed());
}

TEST(AlgebraFunctor, HomotopyMultiplicationIsMu) {
  MatrixCategory c(kF2);
  auto const     r = monoid_algebra(Monoid::cyclic(2), kF2).algebra();
  auto const     s = monoid_algebra(Monoid::cyclic(3), kF2).algebra();
  auto const     h = homotopy_category_multiplication(algebra_functor(c, r, 2));
  EXPECT_TRUE(h.report.passed());
  EXPECT_EQ(h.value, r.mu);

  auto const unit = homotopy_category_multiplication(algebra_functor(c, unit_algebra(c), 2));
  EXPECT_EQ(unit.value, c.identity(1));

  auto const rs = homotopy_category_multiplication(algebra_functor(c, tensor_algebras(c, r, s), 2));
  EXPECT_EQ(rs.value, pair_product_oracle(Monoid::cyclic(2), Monoid::cyclic(3), 2));
}

TEST(NerveAlgebra, LiesOverFinPointed) {
  MatrixCategory c(kF2);
  auto const     f  = algebra_functor(c, monoid_algebra(Monoid::cyclic(2), kF2).algebra(), 2);
  auto const     nv = nerve_algebra(f, 2, 2);
  EXPECT_TRUE(nv.report.passed()) << nv.report.to_text();
  EXPECT_TRUE(nv.image_nerve.set.check_identities().passed());
  EXPECT_THROW((void)nerve_algebra(f, 4, 2), BoundError);
}

TEST(Pairing, PushforwardIsTheCoproductAlgebra) {
  MatrixCategory c(kF2);
  auto const     c2 = Monoid::cyclic(2);
  auto const     c3 = Monoid::cyclic(3);
  auto const     r  = comm_algebra_functor(c, monoid_algebra(c2, kF2).algebra(), 3);
  auto const     s  = comm_algebra_functor(c, monoid_algebra(c3, kF2).algebra(), 3);
  Pairing<MatrixCategory> p(r, s);
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 2; ++n) {
      for (auto const& alpha : enumerate_pointed_maps(m, n)) {
        auto const push = p.pushforward(r.source().canonical_over(alpha));
        EXPECT_EQ(push.map, alpha);
        for (std::size_t j = 1; j <= n; ++j) {
          EXPECT_EQ(push.components[j - 1],
                    pair_product_oracle(c2, c3, alpha.preimage(j).size()))
              << alpha.to_string() << " j=" << j;
        }
      }
    }
  }
}

TEST(Pairing, ReportForGroupAlgebraAndFiniteSets) {
  MatrixCategory c(kF2);
  auto const     r = monoid_algebra(Monoid::cyclic(2), kF2).algebra();
  auto const     m = pairing_and_pushforward(c, r, r, 3);
  EXPECT_TRUE(m.passed()) << m.to_text();
  FinSetCategory fs;
  auto const     a = monoid_bialgebra(Monoid::cyclic(2)).algebra();
  auto const     f = pairing_and_pushforward(fs, a, a, 3);
  EXPECT_TRUE(f.passed()) << f.to_text();
}

TEST(Cylinder, CounitAndComposition) {
  MatrixCategory c(kF2);
  auto const     b   = monoid_algebra(Monoid::cyclic(2), kF2);
  auto const     r   = comm_algebra_functor(c, b.algebra(), 2);
  auto const     one = comm_algebra_functor(c, unit_algebra(c), 2);
  auto const     eps = cylinder_from_algebra_map(r, one, b.epsilon);
  EXPECT_TRUE(eps.check(2).passed());

  // Over (0→1, fold_2) the component is ε∘μ = ε⊗ε: both group elements go to 1.
  auto const edge = eps.on_morphism(0, 1, r.source().canonical_over(PointedMap::fold(2)));
  EXPECT_EQ(edge.components.at(0), Matrix::from_rows(kF2, {{1, 1, 1, 1}}));

  auto const id   = cylinder_from_algebra_map(r, r, c.identity(2));
  auto const comp = check_cylinder_composition(id, eps, eps, 2);
  EXPECT_TRUE(comp.passed()) << comp.to_text();

  auto const swap = Matrix::from_rows(kF2, {{0, 1}, {1, 0}});
  EXPECT_THROW((void)cylinder_from_algebra_map(r, r, swap), PreconditionError);
}
