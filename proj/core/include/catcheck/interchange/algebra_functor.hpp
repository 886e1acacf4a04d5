#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "catcheck/algebra/algebra.hpp"
#include "catcheck/algebra/operad_algebra.hpp"
#include "catcheck/operators/operad_operator_category.hpp"
#include "catcheck/operators/operator_category.hpp"

namespace catcheck {

  // An algebra R over Comm or Assoc as a functor O^⊗ → C^⊗: [n]_+ goes to
  // (R, ..., R) and (α, {θ_j}) to (α, {μ_{θ_j}}). Defined for arities up to
  // the operad's bound.
  template <SymmetricMonoidalCategory C>
  class AlgebraFunctor {
   public:
    using Target         = OperatorCategory<C>;
    using Object         = typename Target::Object;
    using Morphism       = typename Target::Morphism;
    using SourceMorphism = OperadMorphism;

    AlgebraFunctor(C c, SetOperad operad, AlgebraStructure<C> algebra)
        : _source(operad),
          _target(c),
          _algebra(algebra),
          _structure(OperadAlgebra<C>::from_algebra(std::move(c), std::move(operad), algebra)) {}

    [[nodiscard]] OperadOperatorCategory const& source() const noexcept {
      return _source;
    }
    [[nodiscard]] Target const& target() const noexcept {
      return _target;
    }
    [[nodiscard]] C const& base() const noexcept {
      return _target.base();
    }
    [[nodiscard]] AlgebraStructure<C> const& algebra() const noexcept {
      return _algebra;
    }
    [[nodiscard]] std::size_t arity_bound() const noexcept {
      return _source.operad().max_arity();
    }

    [[nodiscard]] Object on_object(std::size_t n) const {
      return Object(n, _algebra.carrier);
    }

    [[nodiscard]] Morphism on_morphism(SourceMorphism const& f) const {
      std::vector<typename C::Morphism> comps;
      for (std::size_t j = 1; j <= f.map.target(); ++j) {
        comps.push_back(
            _structure.operation(f.map.preimage(j).size(), f.operations[j - 1]));
      }
      return _target.make(on_object(f.map.source()), on_object(f.map.target()), f.map,
                          std::move(comps));
    }

    // F(id) = id and F(g∘f) = F(g)∘F(f) for every composable pair with all
    // three arities at most `arity_bound`. One check per arity triple.
    [[nodiscard]] CheckReport check_functoriality(std::size_t arity_bound) const {
      CheckReport report;
      auto const  N = std::min(arity_bound, arity_bound_checked());
      for (std::size_t n = 0; n <= N; ++n) {
        report.expect(_target.equal(on_morphism(_source.identity(n)),
                                    _target.identity(on_object(n))),
                      "identity [" + std::to_string(n) + "]_+");
      }
      std::vector<std::vector<std::vector<SourceMorphism>>> homs(N + 1);
      std::vector<std::vector<std::vector<Morphism>>>       images(N + 1);
      for (std::size_t m = 0; m <= N; ++m) {
        for (std::size_t n = 0; n <= N; ++n) {
          homs[m].push_back(_source.enumerate_hom(m, n));
          std::vector<Morphism> row;
          for (auto const& f : homs[m][n]) {
            row.push_back(on_morphism(f));
          }
          images[m].push_back(std::move(row));
        }
      }
      for (std::size_t m = 0; m <= N; ++m) {
        for (std::size_t n = 0; n <= N; ++n) {
          for (std::size_t p = 0; p <= N; ++p) {
            std::string const name = "composition " + std::to_string(m) + "→"
                                     + std::to_string(n) + "→" + std::to_string(p);
            std::uint64_t pairs  = 0;
            bool          failed = false;
            for (std::size_t a = 0; a < homs[m][n].size() && !failed; ++a) {
              for (std::size_t b = 0; b < homs[n][p].size(); ++b) {
                auto const gf  = _source.compose(homs[n][p][b], homs[m][n][a]);
                auto const lhs = on_morphism(gf);
                auto const rhs = _target.compose(images[n][p][b], images[m][n][a]);
                ++pairs;
                if (!_target.equal(lhs, rhs)) {
                  report.fail(name, "F(g∘f) ≠ F(g)∘F(f)",
                              {{"f", _source.to_json(homs[m][n][a])},
                               {"g", _source.to_json(homs[n][p][b])},
                               {"F(g∘f)", _target.to_json(lhs)},
                               {"F(g)∘F(f)", _target.to_json(rhs)}});
                  failed = true;
                  break;
                }
              }
            }
            if (!failed) {
              report.pass(name, std::to_string(pairs) + " pairs");
            }
          }
        }
      }
      return report;
    }

    // For every inert α out of [m]_+, m ≤ arity_bound: F sends the
    // canonical morphism over α to the cocartesian lift ᾱ, and ᾱ passes the
    // enumeration criterion against every β : [n]_+ → [p]_+ with p ≤ 2 and
    // every target tuple z drawn from {𝟙, R}^p. Hom-sets above `budget` are
    // skipped.
    [[nodiscard]] CheckReport check_inert_preservation(std::size_t   arity_bound,
                                                       std::uint64_t budget = 1u << 10) const
      requires FiniteHomCategory<C>
    {
      CheckReport report;
      auto const  N    = std::min(arity_bound, arity_bound_checked());
      auto const& base = _target.base();
      for (std::size_t m = 0; m <= N; ++m) {
        for (std::size_t n = 0; n <= m; ++n) {
          for (auto const& alpha : enumerate_pointed_maps(m, n)) {
            if (!alpha.is_inert()) {
              continue;
            }
            auto const x     = on_object(m);
            auto const image = on_morphism(_source.canonical_over(alpha));
            auto const lift  = _target.cocartesian_lift(alpha, x);
            std::string const name = "inert " + alpha.to_string();
            report.expect(_target.equal(image, lift), name + " is sent to its lift", {},
                          _target.equal(image, lift)
                              ? nlohmann::json(nullptr)
                              : nlohmann::json{{"image", _target.to_json(image)},
                                               {"lift", _target.to_json(lift)}});
            for (std::size_t p = 0; p <= 2; ++p) {
              for (auto const& beta : enumerate_pointed_maps(n, p)) {
                for (std::size_t mask = 0; mask < (std::size_t{1} << p); ++mask) {
                  Object z;
                  for (std::size_t t = 0; t < p; ++t) {
                    z.push_back((mask >> t) & 1 ? _algebra.carrier : base.unit());
                  }
                  report.merge(_target.check_cocartesian(alpha, x, beta, z, budget),
                               name + " into " + std::to_string(mask));
                }
              }
            }
          }
        }
      }
      return report;
    }

   private:
    OperadOperatorCategory _source;
    Target                 _target;
    AlgebraStructure<C>    _algebra;
    OperadAlgebra<C>       _structure;

    [[nodiscard]] std::size_t arity_bound_checked() const noexcept {
      return _source.operad().max_arity();
    }
  };

  // R^⊗ : Comm^⊗ → C^⊗. Throws PreconditionError unless R passes the
  // algebra checks and μ∘σ = μ.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] AlgebraFunctor<C> comm_algebra_functor(C const&                   c,
                                                       AlgebraStructure<C> const& r,
                                                       std::size_t                arity_bound) {
    auto const report = check_algebra(c, r);
    if (!report.passed()) {
      throw PreconditionError("not an algebra: " + report.first_failure()->name);
    }
    if (!c.equal(c.compose(r.mu, c.braiding(r.carrier, r.carrier)), r.mu)) {
      throw PreconditionError("the multiplication is not commutative");
    }
    return AlgebraFunctor<C>(c, SetOperad::comm(arity_bound), r);
  }

  // R^⊗ : Assoc^⊗ → C^⊗; the component over an ordered preimage multiplies
  // in that order.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] AlgebraFunctor<C> assoc_algebra_functor(C const&                   c,
                                                        AlgebraStructure<C> const& r,
                                                        std::size_t                arity_bound) {
    auto const report = check_algebra(c, r);
    if (!report.passed()) {
      throw PreconditionError("not an algebra: " + report.first_failure()->name);
    }
    return AlgebraFunctor<C>(c, SetOperad::assoc(arity_bound), r);
  }

  // Comm when μ is commutative, Assoc otherwise.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] AlgebraFunctor<C> algebra_functor(C const&                   c,
                                                  AlgebraStructure<C> const& r,
                                                  std::size_t                arity_bound) {
    if (c.equal(c.compose(r.mu, c.braiding(r.carrier, r.carrier)), r.mu)) {
      return comm_algebra_functor(c, r, arity_bound);
    }
    return assoc_algebra_functor(c, r, arity_bound);
  }

  template <SymmetricMonoidalCategory C>
  struct ExtractedMultiplication {
    typename C::Morphism value;
    CheckReport          report;
  };

  // The edge F(fold) : (R, R) → (R) factored as h ∘ fold̄ with h over the
  // identity of [1]_+; its one component, compared with μ.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] ExtractedMultiplication<C>
  homotopy_category_multiplication(AlgebraFunctor<C> const& f) {
    auto const fold = PointedMap::fold(2);
    auto const edge = f.on_morphism(f.source().canonical_over(fold));
    auto const h    = f.target().factor_through_lift(edge, fold, PointedMap::identity(1));
    ExtractedMultiplication<C> out{h.components.at(0), {}};
    auto const&                c = f.base();
    detail::expect_equal(out.report, c, "fold edge factors through μ", out.value,
                         f.algebra().mu);
    return out;
  }

  // A functor {0→1} × O^⊗ → C^⊗ from an algebra map f : R → S. Over
  // (ℓ, [n]_+) sit n copies of R (ℓ = 0) or S (ℓ = 1); over (0→1, α) the
  // component j is μ^S_{θ_j} ∘ f^{⊗|α⁻¹(j)|}.
  template <SymmetricMonoidalCategory C>
  class AlgebraMapCylinder {
   public:
    using Object   = typename AlgebraFunctor<C>::Object;
    using Morphism = typename AlgebraFunctor<C>::Morphism;

    AlgebraMapCylinder(AlgebraFunctor<C> r, AlgebraFunctor<C> s, typename C::Morphism f)
        : _r(std::move(r)), _s(std::move(s)), _f(std::move(f)) {}

    [[nodiscard]] AlgebraFunctor<C> const& source_end() const noexcept {
      return _r;
    }
    [[nodiscard]] AlgebraFunctor<C> const& target_end() const noexcept {
      return _s;
    }
    [[nodiscard]] typename C::Morphism const& map() const noexcept {
      return _f;
    }

    [[nodiscard]] Object on_object(std::size_t level, std::size_t n) const {
      return level == 0 ? _r.on_object(n) : _s.on_object(n);
    }

    // The image of (from→to, g) with from ≤ to in {0, 1}.
    [[nodiscard]] Morphism on_morphism(std::size_t from, std::size_t to,
                                       OperadMorphism const& g) const {
      if (from > to || to > 1) {
        throw PreconditionError("no morphism " + std::to_string(from) + "→"
                                + std::to_string(to) + " in {0→1}");
      }
      if (from == to) {
        return from == 0 ? _r.on_morphism(g) : _s.on_morphism(g);
      }
      auto const& c     = _s.base();
      auto        image = _s.on_morphism(g);
      for (std::size_t j = 1; j <= g.map.target(); ++j) {
        auto const k           = g.map.preimage(j).size();
        image.components[j - 1] = c.compose(image.components[j - 1], tensor_power(c, _f, k));
      }
      image.source = _r.on_object(g.map.source());
      return image;
    }

    // Both ends restrict to R^⊗ and S^⊗, and F(g∘f) = F(g)∘F(f) over every
    // composable pair in {0→1} × O^⊗ with arities ≤ arity_bound.
    [[nodiscard]] CheckReport check(std::size_t arity_bound) const {
      CheckReport report;
      auto const& src = _r.source();
      auto const& tgt = _r.target();
      auto const  N   = std::min(arity_bound, _r.arity_bound());
      report.expect(tgt.base().equal(_f, _f), "map is defined");
      bool ends = true;
      for (std::size_t m = 0; m <= N && ends; ++m) {
        for (std::size_t n = 0; n <= N && ends; ++n) {
          for (auto const& g : src.enumerate_hom(m, n)) {
            if (!tgt.equal(on_morphism(0, 0, g), _r.on_morphism(g))
                || !tgt.equal(on_morphism(1, 1, g), _s.on_morphism(g))) {
              report.fail("restriction to the ends", "an end differs",
                          {{"g", src.to_json(g)}});
              ends = false;
              break;
            }
          }
        }
      }
      if (ends) {
        report.pass("restriction to the ends");
      }
      std::uint64_t pairs = 0;
      for (std::size_t m = 0; m <= N; ++m) {
        for (std::size_t n = 0; n <= N; ++n) {
          auto const first = src.enumerate_hom(m, n);
          for (std::size_t p = 0; p <= N; ++p) {
            auto const second = src.enumerate_hom(n, p);
            for (auto const& a : first) {
              for (auto const& b : second) {
                auto const ba = src.compose(b, a);
                for (auto [l0, l1, l2] : {std::array<std::size_t, 3>{0, 0, 1},
                                          std::array<std::size_t, 3>{0, 1, 1}}) {
                  ++pairs;
                  auto const lhs = on_morphism(l0, l2, ba);
                  auto const rhs = tgt.compose(on_morphism(l1, l2, b), on_morphism(l0, l1, a));
                  if (!tgt.equal(lhs, rhs)) {
                    report.fail("functoriality", "composite differs",
                                {{"f", src.to_json(a)},
                                 {"g", src.to_json(b)},
                                 {"levels", {l0, l1, l2}}});
                    return report;
                  }
                }
              }
            }
          }
        }
      }
      report.pass("functoriality", std::to_string(pairs) + " pairs");
      return report;
    }

   private:
    AlgebraFunctor<C>    _r;
    AlgebraFunctor<C>    _s;
    typename C::Morphism _f;
  };

  // Throws PreconditionError unless f is an algebra map and both functors
  // use the same operad.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] AlgebraMapCylinder<C> cylinder_from_algebra_map(AlgebraFunctor<C> const&    r,
                                                                AlgebraFunctor<C> const&    s,
                                                                typename C::Morphism const& f) {
    auto const& c      = r.base();
    auto const  report = check_algebra_map(c, f, r.algebra(), s.algebra());
    if (!report.passed()) {
      throw PreconditionError("not an algebra map: " + report.first_failure()->name);
    }
    if (r.source().operad().name() != s.source().operad().name()
        || r.arity_bound() != s.arity_bound()) {
      throw PreconditionError("the two ends use different operads");
    }
    return AlgebraMapCylinder<C>(r, s, f);
  }

  // Gluing the cylinders of f : R → S and g : S → T along S agrees with the
  // cylinder of g∘f: over (0→1, α), G(0→1, α)∘F(0→1, id) and
  // G(0→1, id)∘F(0→1, α) both equal (g∘f)'s component.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CheckReport check_cylinder_composition(AlgebraMapCylinder<C> const& first,
                                                       AlgebraMapCylinder<C> const& second,
                                                       AlgebraMapCylinder<C> const& composite,
                                                       std::size_t arity_bound) {
    CheckReport report;
    auto const& src = composite.source_end().source();
    auto const& tgt = composite.source_end().target();
    auto const  N   = std::min(arity_bound, composite.source_end().arity_bound());
    for (std::size_t m = 0; m <= N; ++m) {
      for (std::size_t n = 0; n <= N; ++n) {
        std::size_t count = 0;
        bool        ok    = true;
        for (auto const& a : src.enumerate_hom(m, n)) {
          auto const want  = composite.on_morphism(0, 1, a);
          auto const left  = tgt.compose(second.on_morphism(0, 1, a),
                                         first.on_morphism(0, 1, src.identity(m)));
          auto const right = tgt.compose(second.on_morphism(0, 1, src.identity(n)),
                                         first.on_morphism(0, 1, a));
          ++count;
          if (!tgt.equal(left, want) || !tgt.equal(right, want)) {
            report.fail("glued " + std::to_string(m) + "→" + std::to_string(n),
                        "glued cylinder differs from the composite's",
                        {{"alpha", src.to_json(a)}, {"expected", tgt.to_json(want)}});
            ok = false;
            break;
          }
        }
        if (ok) {
          report.pass("glued " + std::to_string(m) + "→" + std::to_string(n),
                      std::to_string(count) + " morphisms");
        }
      }
    }
    return report;
  }

}  // namespace catcheck
