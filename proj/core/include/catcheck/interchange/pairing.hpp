#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catcheck/interchange/algebra_functor.hpp"

namespace catcheck {

  namespace detail {

    // [2m]_+ with point 2i-1 the R copy and 2i the S copy of point i.
    inline PointedMap doubled(PointedMap const& alpha) {
      std::vector<std::size_t> table;
      for (auto v : alpha.table()) {
        table.push_back(v == 0 ? 0 : 2 * v - 1);
        table.push_back(v == 0 ? 0 : 2 * v);
      }
      return PointedMap(2 * alpha.source(), 2 * alpha.target(), std::move(table));
    }

    // [2m]_+ → [m]_+ folding 2i-1 and 2i onto i.
    inline PointedMap pair_fold(std::size_t m) {
      std::vector<std::size_t> table;
      for (std::size_t i = 1; i <= m; ++i) {
        table.push_back(i);
        table.push_back(i);
      }
      return PointedMap(2 * m, m, std::move(table));
    }

    // [2m]_+ → [m]_+ keeping the copies at parity `side` (0 for R, 1 for S).
    inline PointedMap pair_restriction(std::size_t m, std::size_t side) {
      std::vector<std::size_t> table;
      for (std::size_t i = 1; i <= m; ++i) {
        table.push_back(side == 0 ? i : 0);
        table.push_back(side == 1 ? i : 0);
      }
      return PointedMap(2 * m, m, std::move(table));
    }

  }  // namespace detail

  // (R, S)^⊗ on [2]_+ × Fin_*: [m]_+ goes to (R, S, R, S, ...) and α to the
  // doubled map with R's components on the odd slots and S's on the even.
  template <SymmetricMonoidalCategory C>
  class Pairing {
   public:
    using Morphism = typename AlgebraFunctor<C>::Morphism;
    using Object   = typename AlgebraFunctor<C>::Object;

    Pairing(AlgebraFunctor<C> r, AlgebraFunctor<C> s) : _r(std::move(r)), _s(std::move(s)) {}

    [[nodiscard]] Object on_object(std::size_t m) const {
      Object out;
      for (std::size_t i = 0; i < m; ++i) {
        out.push_back(_r.algebra().carrier);
        out.push_back(_s.algebra().carrier);
      }
      return out;
    }

    [[nodiscard]] Morphism on_morphism(OperadMorphism const& f) const {
      auto const                        a = _r.on_morphism(f);
      auto const                        b = _s.on_morphism(f);
      std::vector<typename C::Morphism> comps;
      for (std::size_t j = 0; j < a.components.size(); ++j) {
        comps.push_back(a.components[j]);
        comps.push_back(b.components[j]);
      }
      return _r.target().make(on_object(f.map.source()), on_object(f.map.target()),
                              detail::doubled(f.map), std::move(comps));
    }

    // π_!(P(f)) where π folds each pair: the factorization of
    // lift(π, P(n)) ∘ P(f) through lift(π, P(m)).
    [[nodiscard]] Morphism pushforward(OperadMorphism const& f) const {
      auto const& tgt = _r.target();
      auto const  m = f.map.source(), n = f.map.target();
      auto const  g = tgt.compose(tgt.cocartesian_lift(detail::pair_fold(n), on_object(n)),
                                  on_morphism(f));
      return tgt.factor_through_lift(g, detail::pair_fold(m), f.map);
    }

    [[nodiscard]] AlgebraFunctor<C> const& left() const noexcept {
      return _r;
    }
    [[nodiscard]] AlgebraFunctor<C> const& right() const noexcept {
      return _s;
    }

   private:
    AlgebraFunctor<C> _r;
    AlgebraFunctor<C> _s;
  };

  // For commutative R and S, up to `arity_bound`:
  //  - (R, S)^⊗ restricts to R^⊗ and S^⊗ along the two inert maps;
  //  - its pushforward along the pair fold equals (R⊗S)^⊗ componentwise;
  //  - pushing forward the maps (R, 𝟙)^⊗ → (R, S)^⊗ and (𝟙, S)^⊗ → (R, S)^⊗
  //    induced by the units gives id⊗η_S and η_R⊗id, algebra maps natural
  //    over every α.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CheckReport pairing_and_pushforward(C const&                   c,
                                                    AlgebraStructure<C> const& r,
                                                    AlgebraStructure<C> const& s,
                                                    std::size_t                arity_bound) {
    using Morphism = typename AlgebraFunctor<C>::Morphism;
    auto const rf  = comm_algebra_functor(c, r, arity_bound);
    auto const sf  = comm_algebra_functor(c, s, arity_bound);
    auto const rs  = tensor_algebras(c, r, s);
    auto const tf  = comm_algebra_functor(c, rs, arity_bound);
    auto const one = unit_algebra(c);
    auto const uf  = comm_algebra_functor(c, one, arity_bound);
    Pairing<C> const pair(rf, sf);
    Pairing<C> const left(rf, uf);
    Pairing<C> const right(uf, sf);
    auto const&      src = rf.source();
    auto const&      tgt = rf.target();
    auto const       N   = rf.arity_bound();

    // ι_m : pushforward of the slotwise unit map over the identity of [2m]_+.
    auto insertion = [&](std::size_t m, Pairing<C> const& from, bool r_side) {
      std::vector<typename C::Morphism> comps;
      for (std::size_t i = 0; i < m; ++i) {
        comps.push_back(r_side ? c.identity(r.carrier) : r.eta);
        comps.push_back(r_side ? s.eta : c.identity(s.carrier));
      }
      auto const slotwise = tgt.make(from.on_object(m), pair.on_object(m),
                                     PointedMap::identity(2 * m), std::move(comps));
      return tgt.pushforward(detail::pair_fold(m), slotwise);
    };

    CheckReport report;
    auto record = [&](std::string const& name, std::size_t count, Morphism const* a,
                      Morphism const* b, nlohmann::json const& where) {
      if (a) {
        report.fail(name, "components differ",
                    {{"at", where}, {"got", tgt.to_json(*a)}, {"expected", tgt.to_json(*b)}});
      } else {
        report.pass(name, std::to_string(count) + " morphisms");
      }
    };

    for (std::size_t m = 0; m <= N; ++m) {
      for (std::size_t n = 0; n <= N; ++n) {
        auto const  homs = src.enumerate_hom(m, n);
        std::string tag  = " " + std::to_string(m) + "→" + std::to_string(n);
        struct Bad {
          Morphism       got, want;
          nlohmann::json where;
        };
        std::optional<Bad> restrict_bad, push_bad, unit_bad, nat_bad;
        for (auto const& f : homs) {
          auto const p = pair.on_morphism(f);
          for (std::size_t side = 0; side < 2 && !restrict_bad; ++side) {
            auto const got
                = tgt.compose(tgt.cocartesian_lift(detail::pair_restriction(n, side),
                                                   pair.on_object(n)),
                              p);
            auto const& end  = side == 0 ? rf : sf;
            auto const  want = tgt.compose(
                end.on_morphism(f),
                tgt.cocartesian_lift(detail::pair_restriction(m, side), pair.on_object(m)));
            if (!tgt.equal(got, want)) {
              restrict_bad = Bad{got, want, src.to_json(f)};
            }
          }
          auto const pushed = pair.pushforward(f);
          auto const want   = tf.on_morphism(f);
          if (!push_bad && !tgt.equal(pushed, want)) {
            push_bad = Bad{pushed, want, src.to_json(f)};
          }
          if (!unit_bad) {
            auto const lr = left.pushforward(f), rr = right.pushforward(f);
            if (!tgt.equal(lr, rf.on_morphism(f))) {
              unit_bad = Bad{lr, rf.on_morphism(f), src.to_json(f)};
            } else if (!tgt.equal(rr, sf.on_morphism(f))) {
              unit_bad = Bad{rr, sf.on_morphism(f), src.to_json(f)};
            }
          }
          for (int side = 0; side < 2 && !nat_bad; ++side) {
            auto const& from = side == 0 ? left : right;
            auto const  lhs  = tgt.compose(want, insertion(m, from, side == 0));
            auto const  rhs  = tgt.compose(insertion(n, from, side == 0), from.pushforward(f));
            if (!tgt.equal(lhs, rhs)) {
              nat_bad = Bad{lhs, rhs, src.to_json(f)};
            }
          }
        }
        auto emit = [&](std::string const& name, std::optional<Bad> const& bad) {
          record(name + tag, homs.size(), bad ? &bad->got : nullptr,
                 bad ? &bad->want : nullptr, bad ? bad->where : nlohmann::json());
        };
        emit("restricts to R and S", restrict_bad);
        emit("pushforward equals (R⊗S)^⊗", push_bad);
        emit("unit pairing equals the other factor", unit_bad);
        emit("insertions are natural", nat_bad);
      }
    }

    auto const ir = insertion(1, left, true).components.at(0);
    auto const is = insertion(1, right, false).components.at(0);
    detail::expect_equal(report, c, "insertion of R is id⊗η_S", ir,
                         c.tensor(c.identity(r.carrier), s.eta));
    detail::expect_equal(report, c, "insertion of S is η_R⊗id", is,
                         c.tensor(r.eta, c.identity(s.carrier)));
    report.merge(check_algebra_map(c, ir, r, rs), "insertion of R");
    report.merge(check_algebra_map(c, is, s, rs), "insertion of S");
    return report;
  }

}  // namespace catcheck
