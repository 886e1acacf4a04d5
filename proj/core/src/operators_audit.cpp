#include "catcheck/operators/audit.hpp"

#include <random>

#include "catcheck/finset_category.hpp"
#include "catcheck/matrix_category.hpp"
#include "catcheck/operators/operad_operator_category.hpp"
#include "catcheck/operators/operator_category.hpp"

namespace catcheck {

  namespace {

    using MatOp = OperatorCategory<MatrixCategory>;

    Matrix random_matrix(Ring const& ring, std::size_t rows, std::size_t cols,
                         std::mt19937_64& rng) {
      Matrix m(ring, rows, cols);
      auto const p = ring.characteristic();
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          m.set_int(i, j, static_cast<std::int64_t>(rng() % p));
        }
      }
      return m;
    }

    MatOp::Object random_tuple(std::size_t n, std::mt19937_64& rng) {
      MatOp::Object out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(1 + rng() % 2);
      }
      return out;
    }

    MatOp::Morphism random_over(MatOp const& op, PointedMap const& alpha,
                                MatOp::Object const& x, MatOp::Object const& y,
                                std::mt19937_64& rng) {
      std::vector<Matrix> comps;
      for (std::size_t j = 1; j <= alpha.target(); ++j) {
        comps.push_back(random_matrix(op.base().ring(), y[j - 1],
                                      op.preimage_tensor(x, alpha, j), rng));
      }
      return op.make(x, y, alpha, std::move(comps));
    }

  }  // namespace

  CheckReport operator_associativity(OperatorsAuditOptions const& options) {
    MatOp const     op{MatrixCategory(Ring::prime_field(options.prime))};
    std::mt19937_64 rng(options.seed);
    auto const      N = options.associativity_arity;
    std::vector<std::vector<std::vector<PointedMap>>> maps(N + 1);
    for (std::size_t m = 0; m <= N; ++m) {
      for (std::size_t n = 0; n <= N; ++n) {
        maps[m].push_back(enumerate_pointed_maps(m, n));
      }
    }
    CheckReport   report;
    std::uint64_t triples = 0;
    for (std::size_t a = 0; a <= N; ++a) {
      for (std::size_t b = 0; b <= N; ++b) {
        for (std::size_t c = 0; c <= N; ++c) {
          for (std::size_t d = 0; d <= N; ++d) {
            for (auto const& alpha : maps[a][b]) {
              for (auto const& beta : maps[b][c]) {
                for (auto const& gamma : maps[c][d]) {
                  auto const x = random_tuple(a, rng), y = random_tuple(b, rng);
                  auto const z = random_tuple(c, rng), w = random_tuple(d, rng);
                  auto const f   = random_over(op, alpha, x, y, rng);
                  auto const g   = random_over(op, beta, y, z, rng);
                  auto const h   = random_over(op, gamma, z, w, rng);
                  auto const lhs = op.compose(h, op.compose(g, f));
                  auto const rhs = op.compose(op.compose(h, g), f);
                  ++triples;
                  bool const units = op.equal(op.compose(op.identity(y), f), f)
                                     && op.equal(op.compose(f, op.identity(x)), f);
                  if (!op.equal(lhs, rhs) || !units) {
                    report.fail("associativity", "h∘(g∘f) ≠ (h∘g)∘f or a unit law fails",
                                {{"f", op.to_json(f)}, {"g", op.to_json(g)},
                                 {"h", op.to_json(h)}});
                    return report;
                  }
                }
              }
            }
          }
        }
      }
    }
    report.pass("associativity", std::to_string(triples) + " pointed-map triples, arities ≤ "
                                     + std::to_string(N) + ", seed "
                                     + std::to_string(options.seed));
    report.pass("unit laws", std::to_string(triples) + " morphisms");
    return report;
  }

  CheckReport pointed_map_audit(std::size_t bound) {
    CheckReport report;
    for (std::size_t m = 0; m <= bound; ++m) {
      for (std::size_t n = 0; n <= bound; ++n) {
        auto const counted = count_pointed_maps(m, n);
        auto const formula = pointed_map_count_formula(m, n);
        report.expect(counted == formula,
                      "|Hom([" + std::to_string(m) + "]+, [" + std::to_string(n) + "]+)|",
                      std::to_string(counted), {{"enumerated", counted}, {"formula", formula}});
      }
    }
    std::uint64_t count = 0;
    for (std::size_t m = 0; m <= bound; ++m) {
      for (std::size_t n = 0; n <= bound; ++n) {
        for (auto const& alpha : enumerate_pointed_maps(m, n)) {
          auto const fac = inert_active_factorize(alpha);
          ++count;
          if (!(compose(fac.active, fac.inert) == alpha) || !fac.inert.is_inert()
              || !fac.active.is_active()) {
            report.fail("inert/active factorization", "factorization does not recompose",
                        {{"alpha", alpha.to_json()},
                         {"inert", fac.inert.to_json()},
                         {"active", fac.active.to_json()}});
            return report;
          }
        }
      }
    }
    report.pass("inert/active factorization", std::to_string(count) + " maps");
    return report;
  }

  CheckReport segal_audit(std::uint64_t prime, std::size_t bound) {
    CheckReport                    report;
    MatOp const                    mat{MatrixCategory(Ring::prime_field(prime))};
    OperatorCategory<FinSetCategory> const fin{FinSetCategory{}};
    std::vector<std::size_t> const population{1, 2};
    for (std::size_t n = 1; n <= bound; ++n) {
      report.merge(mat.segal_check(n, population), "F_" + std::to_string(prime) + " n="
                                                       + std::to_string(n));
      report.merge(fin.segal_check(n, population), "FinSet n=" + std::to_string(n));
    }
    return report;
  }

  CheckReport cocartesian_audit(std::uint64_t prime) {
    CheckReport report;
    MatOp const op{MatrixCategory(Ring::prime_field(prime))};
    std::vector<std::size_t> const population{1, 2};
    auto tuples = [&](std::size_t n) {
      std::vector<MatOp::Object> out{{}};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<MatOp::Object> next;
        for (auto const& t : out) {
          for (auto d : population) {
            auto u = t;
            u.push_back(d);
            next.push_back(std::move(u));
          }
        }
        out = std::move(next);
      }
      return out;
    };
    for (std::size_t m = 0; m <= 2; ++m) {
      for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t p = 0; p <= 2; ++p) {
          for (auto const& alpha : enumerate_pointed_maps(m, n)) {
            for (auto const& beta : enumerate_pointed_maps(n, p)) {
              for (auto const& x : tuples(m)) {
                for (auto const& z : tuples(p)) {
                  report.merge(op.check_cocartesian(alpha, x, beta, z));
                }
              }
            }
          }
        }
      }
    }
    return report;
  }

  CheckReport operad_audit(std::size_t skeleton_bound) {
    CheckReport report;
    auto const  bound = std::max<std::size_t>(skeleton_bound, 4);
    auto const  comm  = SetOperad::comm(bound);
    auto const  assoc = SetOperad::assoc(bound);
    report.merge(comm.check_laws(), "Comm");
    report.merge(assoc.check_laws(), "Assoc");
    OperadOperatorCategory const comm_op(comm), assoc_op(assoc);
    report.merge(comm_op.check_projection_isomorphism(skeleton_bound), "Comm^⊗ → Fin_*");
    auto const folds = assoc_op.enumerate_hom_over(PointedMap::fold(2)).size();
    report.expect(folds == 2, "Assoc^⊗ over the fold [2]+ → [1]+", std::to_string(folds));
    std::uint64_t oracle = 0;
    for (auto const& alpha : enumerate_pointed_maps(2, 1)) {
      std::uint64_t k = alpha.preimage(1).size();
      oracle += k == 2 ? 2 : 1;
    }
    report.expect(assoc_op.hom_size(2, 1) == oracle, "|Assoc^⊗([2]+, [1]+)|",
                  std::to_string(assoc_op.hom_size(2, 1)));
    return report;
  }

  CheckReport operators_audit(OperatorsAuditOptions const& options) {
    CheckReport report;
    report.merge(pointed_map_audit(options.count_bound), "Fin_*");
    report.merge(operator_associativity(options), "C^⊗");
    report.merge(segal_audit(options.prime, options.segal_bound), "Segal");
    report.merge(cocartesian_audit(options.prime), "cocartesian");
    report.merge(operad_audit(options.skeleton_bound), "operads");
    return report;
  }

}  // namespace catcheck
