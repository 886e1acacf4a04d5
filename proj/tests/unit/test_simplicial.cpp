#include <gtest/gtest.h>

#include <fstream>

#include <nlohmann/json.hpp>

#include "catcheck/error.hpp"
#include "catcheck/finite_category.hpp"
#include "catcheck/simplicial/coherent_cube.hpp"
#include "catcheck/simplicial/hc_nerve.hpp"
#include "catcheck/simplicial/horn.hpp"
#include "catcheck/simplicial/nerve.hpp"
#include "catcheck/simplicial/simplicial_category.hpp"
#include "catcheck/simplicial/simplicial_set.hpp"

using namespace catcheck;

namespace {

  std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
      out = out * (n - k + i) / i;
    }
    return out;
  }

  FiniteCategory c2_groupoid() {
    return FiniteCategory::from_monoid({{0, 1}, {1, 0}}, {"e", "g"});
  }

  // a --f--> b with an idempotent e on a absorbed by f; not a groupoid.
  FiniteCategory idempotent_arrow() {
    return FiniteCategory::generate({"a", "b"},
                                    {{0, 0, "1a"}, {1, 1, "1b"}, {0, 1, "f"}, {0, 0, "e"}},
                                    {0, 1},
                                    [](std::size_t g, std::size_t f) -> std::size_t {
                                      if (g == 0 || g == 1) {
                                        return f;
                                      }
                                      if (f == 0 || f == 1) {
                                        return g;
                                      }
                                      return g == 2 ? 2 : 3;  // f∘e = f, e∘e = e
                                    });
  }

  // 2-simplices of N^s(C_•): a, b at level 0 and h in C_1(x0, x2) whose
  // face d_0 (the vertex {0,1,2} of P_{0,2}) is b∘a.
  std::size_t brute_hc_triangles(SimplicialCategory const& s) {
    auto const& c0    = s.level(0);
    auto const& c1    = s.level(1);
    std::size_t count = 0;
    for (std::size_t x0 = 0; x0 < s.object_count(); ++x0) {
      for (std::size_t x1 = 0; x1 < s.object_count(); ++x1) {
        for (std::size_t x2 = 0; x2 < s.object_count(); ++x2) {
          for (auto a : c0.hom(x0, x1)) {
            for (auto b : c0.hom(x1, x2)) {
              for (auto h : c1.hom(x0, x2)) {
                count += s.face(1, 0, h) == c0.compose(b, a) ? 1 : 0;
              }
            }
          }
        }
      }
    }
    return count;
  }

}  // namespace

TEST(StandardSimplex, SizesAreBinomial) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const x = standard_simplex(n, 3);
    for (std::size_t k = 0; k <= 3; ++k) {
      EXPECT_EQ(x.size(k), binomial(n + k + 1, k + 1));
      EXPECT_EQ(x.nondegenerate_count(k), binomial(n + 1, k + 1));
    }
    EXPECT_TRUE(x.check_identities().passed());
  }
  auto const p = product(standard_simplex(1, 3), standard_simplex(1, 3));
  EXPECT_TRUE(p.check_identities().passed());
  EXPECT_EQ(p.nondegenerate_count(2), 2u);
}

TEST(StandardSimplex, JsonRoundTrip) {
  auto const x = standard_simplex(2, 3);
  EXPECT_EQ(TruncatedSimplicialSet::from_json(x.to_json()), x);
}

TEST(Nerve, ArrowCategoryByHand) {
  auto const n = nerve(FiniteCategory::ordinal(1), 2);
  EXPECT_EQ(n.set.size(0), 2u);
  EXPECT_EQ(n.set.size(1), 3u);
  EXPECT_EQ(n.set.size(2), 4u);
  EXPECT_EQ(n.set.nondegenerate_count(1), 1u);
  EXPECT_EQ(n.set.nondegenerate_count(2), 0u);
  EXPECT_TRUE(n.set.check_identities().passed());
}

TEST(Nerve, MatchesGoldenJson) {
  std::ifstream in(std::string(CATCHECK_GOLDEN_DIR) + "/nerve_c2_d2.json");
  ASSERT_TRUE(in) << "missing golden file";
  auto const golden = nlohmann::json::parse(in);
  EXPECT_EQ(nerve(c2_groupoid(), 2).set.to_json(), golden);
}

TEST(Nerve, ChainsComposeOnInnerFaces) {
  auto const c = idempotent_arrow();
  auto const n = nerve(c, 3);
  EXPECT_TRUE(n.set.check_identities().passed());
  for (std::size_t x = 0; x < n.set.size(2); ++x) {
    auto const& ch = n.chains[2][x];
    auto const  d1 = n.set.face(2, 1, x);
    EXPECT_EQ(n.chains[1][d1], std::vector<std::size_t>{c.compose(ch[1], ch[0])});
  }
}

TEST(Horns, GroupoidFillsEverything) {
  auto const audit = horn_check(nerve(c2_groupoid(), 3).set, HornKind::all, 3);
  EXPECT_TRUE(audit.report.passed()) << audit.report.to_text();
  for (auto const& h : audit.counts) {
    EXPECT_EQ(h.filled, h.horns);
    if (h.n >= 2) {
      EXPECT_EQ(h.uniquely, h.horns) << h.n << "," << h.k;
    }
  }
}

TEST(Horns, NonInvertibleArrowFailsOuterHorn) {
  auto const x     = nerve(idempotent_arrow(), 3).set;
  auto const inner = horn_check(x, HornKind::inner, 3);
  EXPECT_TRUE(inner.report.passed()) << inner.report.to_text();
  auto const all = horn_check(x, HornKind::all, 3);
  auto const* bad = all.report.find("Λ^2_0");
  ASSERT_NE(bad, nullptr);
  EXPECT_EQ(bad->status, Status::fail);
  EXPECT_FALSE(bad->witness.is_null());
}

TEST(Horns, StandardSimplexIsNotKan) {
  auto const audit = horn_check(standard_simplex(1, 3), HornKind::all, 2);
  EXPECT_FALSE(audit.report.passed());
  EXPECT_TRUE(horn_check(standard_simplex(2, 3), HornKind::inner, 3).report.passed());
}

TEST(CoherentCube, SubsetCountsArePowersOfTwo) {
  for (std::size_t n = 1; n <= 5; ++n) {
    CoherentCube const cube(n);
    EXPECT_EQ(cube.subsets(0, n).size(), std::size_t{1} << (n - 1));
  }
}

TEST(CoherentCube, SimplicialCategoryAxioms) {
  auto const s = SimplicialCategory::from_cube(CoherentCube(3), 3);
  EXPECT_TRUE(s.check_axioms().passed());
  EXPECT_FALSE(s.is_discrete());
  EXPECT_TRUE(SimplicialCategory::discrete(c2_groupoid(), 2).is_discrete());
}

TEST(HcNerve, DiscreteEqualsOrdinaryNerve) {
  for (auto const& c : {c2_groupoid(), idempotent_arrow(), FiniteCategory::ordinal(2)}) {
    auto const s  = SimplicialCategory::discrete(c, 3);
    auto const hc = hc_nerve(s, 3);
    auto const n  = nerve(c, 3);
    for (std::size_t k = 0; k <= 3; ++k) {
      EXPECT_EQ(hc.set.size(k), n.set.size(k));
    }
    auto const iso = check_isomorphism(hc.set, n.set, discrete_identification(hc, n));
    EXPECT_TRUE(iso.passed()) << iso.to_text();
  }
}

TEST(HcNerve, TrianglesOfANonDiscreteCategoryByBruteForce) {
  auto const cube = SimplicialCategory::from_cube(CoherentCube(2), 2);
  auto const hc   = hc_nerve(cube, 2);
  EXPECT_EQ(hc.set.size(2), brute_hc_triangles(cube));
  EXPECT_TRUE(hc.set.check_identities().passed());

  auto const mixed = SimplicialCategory::product(cube, SimplicialCategory::discrete(c2_groupoid(), 2));
  auto const hm    = hc_nerve(mixed, 2);
  EXPECT_EQ(hm.set.size(2), brute_hc_triangles(mixed));
  EXPECT_EQ(hm.set.size(2), hc.set.size(2) * 4);
}

TEST(HcNerve, AdjunctionUnitForTheInterval) {
  auto const c      = SimplicialCategory::discrete(idempotent_arrow(), 3);
  auto const source = hc_nerve(c, 3);
  auto const target = hc_nerve(
      SimplicialCategory::product(SimplicialCategory::from_cube(CoherentCube(1), 3), c), 3);
  auto const unit   = adjunction_unit(1, c, source, target);
  auto const domain = product(standard_simplex(1, 3), source.set);
  auto const iso    = check_isomorphism(domain, target.set, unit);
  EXPECT_TRUE(iso.passed()) << iso.to_text();
}

TEST(HcNerve, BoundsAreEnforced) {
  auto const s = SimplicialCategory::discrete(FiniteCategory::ordinal(1), 2);
  EXPECT_THROW((void)hc_nerve_simplices(s, 3), BoundError);
}
