#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "catcheck/finset_category.hpp"
#include "catcheck/matrix_category.hpp"
#include "catcheck/operators/audit.hpp"
#include "catcheck/operators/operad_operator_category.hpp"
#include "catcheck/operators/operator_category.hpp"
#include "catcheck/operators/pointed_map.hpp"
#include "catcheck/operators/set_operad.hpp"

using namespace catcheck;

namespace {

  // Every table [m] → {0..n}, odometer order.
  std::vector<std::vector<std::size_t>> all_tables(std::size_t m, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              t(m, 0);
    while (true) {
      out.push_back(t);
      std::size_t i = m;
      while (i > 0 && t[i - 1] == n) {
        t[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
      ++t[i - 1];
    }
  }

  PointedMap from_table(std::size_t m, std::size_t n, std::vector<std::size_t> const& t) {
    return PointedMap(m, n, t);
  }

  std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  using Op = OperatorMorphism<FinSetCategory>;

  // Elements of A_1 × ... × A_r, row-major.
  std::size_t flatten(std::vector<std::size_t> const& sizes, std::vector<std::size_t> const& xs) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out = out * sizes[i] + xs[i];
    }
    return out;
  }

  std::vector<std::size_t> unflatten(std::vector<std::size_t> const& sizes, std::size_t v) {
    std::vector<std::size_t> out(sizes.size());
    for (std::size_t i = sizes.size(); i-- > 0;) {
      out[i] = v % sizes[i];
      v /= sizes[i];
    }
    return out;
  }

  // An operator morphism read as a function of tuples of elements.
  std::vector<std::size_t> evaluate(Op const& f, std::vector<std::size_t> const& a) {
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= f.target.size(); ++j) {
      std::vector<std::size_t> sizes;
      std::vector<std::size_t> xs;
      for (std::size_t i = 1; i <= f.source.size(); ++i) {
        if (f.map(i) == j) {
          sizes.push_back(f.source[i - 1]);
          xs.push_back(a[i - 1]);
        }
      }
      out.push_back(f.components[j - 1](flatten(sizes, xs)));
    }
    return out;
  }

  Op random_operator(OperatorCategory<FinSetCategory> const& c, std::mt19937_64& rng,
                     std::vector<std::size_t> const& source, std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n);
    std::vector<std::size_t>                    t(source.size());
    for (auto& x : t) {
      x = pick(rng);
    }
    auto const               alpha = from_table(source.size(), n, t);
    std::vector<std::size_t> target(n);
    std::vector<Function>    comps;
    for (auto& y : target) {
      y = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    }
    for (std::size_t j = 1; j <= n; ++j) {
      auto const               dom = c.preimage_tensor(source, alpha, j);
      std::vector<std::size_t> table(dom);
      for (auto& v : table) {
        v = std::uniform_int_distribution<std::size_t>(0, target[j - 1] - 1)(rng);
      }
      comps.push_back(Function::from_table(target[j - 1], table));
    }
    return c.make(source, target, alpha, comps);
  }

}  // namespace

TEST(PointedMap, CountIsPowerOfTargetPlusOne) {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      auto const maps = enumerate_pointed_maps(m, n);
      std::set<std::vector<std::size_t>> distinct;
      for (auto const& a : maps) {
        distinct.insert(a.table());
      }
      EXPECT_EQ(distinct.size(), all_tables(m, n).size()) << m << "," << n;
      EXPECT_EQ(count_pointed_maps(m, n), all_tables(m, n).size());
    }
  }
}

TEST(PointedMap, InertActiveFactorization) {
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (auto const& t : all_tables(m, n)) {
        auto const alpha = from_table(m, n, t);
        auto const fa    = inert_active_factorize(alpha);
        EXPECT_EQ(compose(fa.active, fa.inert), alpha);
        EXPECT_TRUE(fa.inert.is_inert());
        EXPECT_TRUE(fa.active.is_active());
        for (std::size_t i = 1; i <= m; ++i) {
          EXPECT_EQ(fa.inert(i) == 0, alpha(i) == 0);
        }
      }
    }
  }
}

TEST(PointedMap, OrderPreservingInertFactorsTrivially) {
  auto const rho = from_table(3, 1, {0, 1, 0});
  auto const fa  = inert_active_factorize(rho);
  EXPECT_EQ(fa.inert, rho);
  EXPECT_EQ(fa.active, PointedMap::identity(1));
  auto const fold = PointedMap::fold(3);
  EXPECT_TRUE(fold.is_active());
  EXPECT_EQ(inert_active_factorize(fold).inert, PointedMap::identity(3));
}

TEST(OperatorCategory, CompositionAgreesWithElementwiseEvaluation) {
  OperatorCategory<FinSetCategory> c{FinSetCategory{}};
  std::mt19937_64                  rng(0x5eed);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::size_t> x(std::uniform_int_distribution<std::size_t>(0, 3)(rng));
    for (auto& a : x) {
      a = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    }
    auto const f = random_operator(c, rng, x, std::uniform_int_distribution<std::size_t>(0, 3)(rng));
    auto const g = random_operator(c, rng, f.target,
                                   std::uniform_int_distribution<std::size_t>(0, 3)(rng));
    auto const gf = c.compose(g, f);
    EXPECT_EQ(gf.map, compose(g.map, f.map));
    std::size_t total = 1;
    for (auto a : x) {
      total *= a;
    }
    for (std::size_t v = 0; v < total; ++v) {
      auto const a = unflatten(x, v);
      ASSERT_EQ(evaluate(gf, a), evaluate(g, evaluate(f, a)))
          << "trial " << trial << " " << g.map.to_string() << " after " << f.map.to_string();
    }
  }
}

TEST(OperatorCategory, InertLiftsAreCocartesian) {
  OperatorCategory<MatrixCategory> c{MatrixCategory(Ring::prime_field(2))};
  std::vector<std::size_t> const   x{1, 2};
  auto const                       rho = from_table(2, 1, {0, 1});
  auto const                       lift = c.cocartesian_lift(rho, x);
  EXPECT_EQ(lift.target, std::vector<std::size_t>{2});
  EXPECT_TRUE(c.base().equal(lift.components[0], c.base().identity(2)));
  for (std::size_t p = 0; p <= 2; ++p) {
    for (auto const& t : all_tables(1, p)) {
      std::vector<std::size_t> z(p, 1);
      auto const               r = c.check_cocartesian(rho, x, from_table(1, p, t), z);
      EXPECT_TRUE(r.passed()) << r.to_text();
    }
  }
}

TEST(OperatorCategory, SegalOnPrimeField) {
  OperatorCategory<MatrixCategory> c{MatrixCategory(Ring::prime_field(3))};
  std::vector<std::size_t> const   pop{1, 2};
  for (std::size_t n = 1; n <= 2; ++n) {
    auto const r = c.segal_check(n, std::span<std::size_t const>(pop));
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST(SetOperad, SizesAndLaws) {
  auto const comm  = SetOperad::comm(4);
  auto const assoc = SetOperad::assoc(4);
  for (std::size_t n = 0; n <= 4; ++n) {
    EXPECT_EQ(comm.size(n), 1u);
    EXPECT_EQ(assoc.size(n), factorial(n));
  }
  EXPECT_TRUE(comm.check_laws().passed());
  EXPECT_TRUE(assoc.check_laws().passed());
  EXPECT_THROW((void)assoc.size(5), BoundError);
}

TEST(OperadOperatorCategory, HomSizesMatchPreimageCounts) {
  OperadOperatorCategory comm(SetOperad::comm(4));
  OperadOperatorCategory assoc(SetOperad::assoc(4));
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      std::uint64_t ordered = 0;
      for (auto const& t : all_tables(m, n)) {
        std::uint64_t prod = 1;
        for (std::size_t j = 1; j <= n; ++j) {
          prod *= factorial(static_cast<std::size_t>(std::count(t.begin(), t.end(), j)));
        }
        ordered += prod;
      }
      EXPECT_EQ(comm.hom_size(m, n), all_tables(m, n).size());
      EXPECT_EQ(assoc.hom_size(m, n), ordered) << m << "," << n;
      EXPECT_EQ(assoc.enumerate_hom(m, n).size(), ordered);
    }
  }
  EXPECT_EQ(assoc.hom_size(2, 1), 5u);
  EXPECT_TRUE(comm.check_projection_isomorphism(4).passed());
  EXPECT_FALSE(assoc.check_projection_isomorphism(2).passed());
}

TEST(OperatorsAudit, PointedMapCounts) {
  auto const r = pointed_map_audit(4);
  EXPECT_TRUE(r.passed()) << r.to_text();
}
