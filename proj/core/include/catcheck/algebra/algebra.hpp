#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/category.hpp"
#include "catcheck/error.hpp"
#include "catcheck/report.hpp"

namespace catcheck {

  template <SymmetricMonoidalCategory C>
  struct AlgebraStructure {
    typename C::Object   carrier;
    typename C::Morphism mu;   // R⊗R → R
    typename C::Morphism eta;  // 𝟙 → R
    bool                 commutative = false;
  };

  template <SymmetricMonoidalCategory C>
  struct CoalgebraStructure {
    typename C::Object   carrier;
    typename C::Morphism delta;    // R → R⊗R
    typename C::Morphism epsilon;  // R → 𝟙
  };

  template <SymmetricMonoidalCategory C>
  struct Bialgebra {
    std::string                         name;
    typename C::Object                  carrier;
    typename C::Morphism                mu;
    typename C::Morphism                eta;
    typename C::Morphism                delta;
    typename C::Morphism                epsilon;
    std::optional<typename C::Morphism> antipode;
    bool                                commutative = false;

    [[nodiscard]] AlgebraStructure<C> algebra() const {
      return {carrier, mu, eta, commutative};
    }
    [[nodiscard]] CoalgebraStructure<C> coalgebra() const {
      return {carrier, delta, epsilon};
    }
  };

  namespace detail {

    template <SymmetricMonoidalCategory C>
    void require_shape(C const&                    c,
                       typename C::Morphism const& f,
                       typename C::Object const&   from,
                       typename C::Object const&   to,
                       std::string const&          what) {
      if (!(c.domain(f) == from) || !(c.codomain(f) == to)) {
        throw ShapeError(what + " has shape " + c.object_json(c.domain(f)).dump() + " → "
                         + c.object_json(c.codomain(f)).dump() + ", expected "
                         + c.object_json(from).dump() + " → " + c.object_json(to).dump());
      }
    }

    // Records lhs == rhs as one check, with both composites as witness.
    template <SymmetricMonoidalCategory C>
    void expect_equal(CheckReport&                report,
                      C const&                    c,
                      std::string                 name,
                      typename C::Morphism const& lhs,
                      typename C::Morphism const& rhs) {
      if (c.equal(lhs, rhs)) {
        report.pass(std::move(name));
      } else {
        report.fail(std::move(name), "composites differ",
                    {{"lhs", c.to_json(lhs)}, {"rhs", c.to_json(rhs)}});
      }
    }

  }  // namespace detail

  template <SymmetricMonoidalCategory C>
  void require_algebra_shapes(C const& c, AlgebraStructure<C> const& a) {
    auto const r = a.carrier;
    detail::require_shape(c, a.mu, c.tensor(r, r), r, "μ");
    detail::require_shape(c, a.eta, c.unit(), r, "η");
  }

  template <SymmetricMonoidalCategory C>
  void require_coalgebra_shapes(C const& c, CoalgebraStructure<C> const& a) {
    auto const r = a.carrier;
    detail::require_shape(c, a.delta, r, c.tensor(r, r), "δ");
    detail::require_shape(c, a.epsilon, r, c.unit(), "ε");
  }

  // Associativity, both unit laws and, when flagged, μ∘σ = μ.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CheckReport check_algebra(C const& c, AlgebraStructure<C> const& a) {
    require_algebra_shapes(c, a);
    CheckReport report;
    auto const  id = c.identity(a.carrier);
    detail::expect_equal(report, c, "associativity",
                         c.compose(a.mu, c.tensor(a.mu, id)),
                         c.compose(a.mu, c.tensor(id, a.mu)));
    detail::expect_equal(report, c, "left unit", c.compose(a.mu, c.tensor(a.eta, id)), id);
    detail::expect_equal(report, c, "right unit", c.compose(a.mu, c.tensor(id, a.eta)), id);
    if (a.commutative) {
      detail::expect_equal(report, c, "commutativity",
                           c.compose(a.mu, c.braiding(a.carrier, a.carrier)), a.mu);
    }
    return report;
  }

  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CheckReport check_coalgebra(C const& c, CoalgebraStructure<C> const& a) {
    require_coalgebra_shapes(c, a);
    CheckReport report;
    auto const  id = c.identity(a.carrier);
    detail::expect_equal(report, c, "coassociativity",
                         c.compose(c.tensor(a.delta, id), a.delta),
                         c.compose(c.tensor(id, a.delta), a.delta));
    detail::expect_equal(report, c, "left counit",
                         c.compose(c.tensor(a.epsilon, id), a.delta), id);
    detail::expect_equal(report, c, "right counit",
                         c.compose(c.tensor(id, a.epsilon), a.delta), id);
    return report;
  }

  // Algebra and coalgebra axioms, then δ and ε as algebra maps.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CheckReport check_bialgebra(C const& c, Bialgebra<C> const& b) {
    CheckReport report;
    report.merge(check_algebra(c, b.algebra()), "algebra");
    report.merge(check_coalgebra(c, b.coalgebra()), "coalgebra");
    auto const r      = b.carrier;
    auto const id     = c.identity(r);
    auto const middle = c.tensor(c.tensor(id, c.braiding(r, r)), id);
    detail::expect_equal(report, c, "compatibility/δ∘μ",
                         c.compose(b.delta, b.mu),
                         c.compose(c.tensor(b.mu, b.mu),
                                   c.compose(middle, c.tensor(b.delta, b.delta))));
    detail::expect_equal(report, c, "compatibility/ε∘μ",
                         c.compose(b.epsilon, b.mu), c.tensor(b.epsilon, b.epsilon));
    detail::expect_equal(report, c, "compatibility/δ∘η",
                         c.compose(b.delta, b.eta), c.tensor(b.eta, b.eta));
    detail::expect_equal(report, c, "compatibility/ε∘η",
                         c.compose(b.epsilon, b.eta), c.identity(c.unit()));
    return report;
  }

  // The unit-object algebra: carrier 𝟙, every structure map the identity.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] AlgebraStructure<C> unit_algebra(C const& c) {
    auto const id = c.identity(c.unit());
    return {c.unit(), id, id, true};
  }

  template <SymmetricMonoidalCategory C>
  [[nodiscard]] Bialgebra<C> unit_bialgebra(C const& c) {
    auto const id = c.identity(c.unit());
    return {"unit", c.unit(), id, id, id, id, id, true};
  }

  // μ_{R⊗S} = (μ_R⊗μ_S)∘(id⊗σ⊗id), η_{R⊗S} = η_R⊗η_S.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] AlgebraStructure<C> tensor_algebras(C const&                   c,
                                                    AlgebraStructure<C> const& r,
                                                    AlgebraStructure<C> const& s) {
    require_algebra_shapes(c, r);
    require_algebra_shapes(c, s);
    auto const middle = c.tensor(c.tensor(c.identity(r.carrier), c.braiding(s.carrier, r.carrier)),
                                 c.identity(s.carrier));
    return {c.tensor(r.carrier, s.carrier),
            c.compose(c.tensor(r.mu, s.mu), middle),
            c.tensor(r.eta, s.eta),
            r.commutative && s.commutative};
  }

  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CheckReport check_algebra_map(C const&                    c,
                                              typename C::Morphism const& f,
                                              AlgebraStructure<C> const&  r,
                                              AlgebraStructure<C> const&  s) {
    require_algebra_shapes(c, r);
    require_algebra_shapes(c, s);
    detail::require_shape(c, f, r.carrier, s.carrier, "algebra map");
    CheckReport report;
    detail::expect_equal(report, c, "preserves μ", c.compose(f, r.mu),
                         c.compose(s.mu, c.tensor(f, f)));
    detail::expect_equal(report, c, "preserves η", c.compose(f, r.eta), s.eta);
    return report;
  }

  template <SymmetricMonoidalCategory C>
  [[nodiscard]] bool is_algebra_map(C const&                    c,
                                    typename C::Morphism const& f,
                                    AlgebraStructure<C> const&  r,
                                    AlgebraStructure<C> const&  s) {
    return check_algebra_map(c, f, r, s).passed();
  }

  template <SymmetricMonoidalCategory C>
  struct CoproductResult {
    std::optional<typename C::Morphism> map;
    CheckReport                         report;
    // Algebra maps R⊗S → T satisfying both restrictions, when enumerated.
    std::optional<std::uint64_t> solutions;
  };

  // h = μ_T∘(f⊗g) : R⊗S → T, checked to be an algebra map restricting to
  // f along id⊗η_S and to g along η_R⊗id. When the hom-set R⊗S → T has at
  // most `budget` elements, every candidate is tried and h must be the
  // only one that works.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CoproductResult<C> coproduct_universal_check(C const&                    c,
                                                             AlgebraStructure<C> const&  r,
                                                             AlgebraStructure<C> const&  s,
                                                             AlgebraStructure<C> const&  t,
                                                             typename C::Morphism const& f,
                                                             typename C::Morphism const& g,
                                                             std::uint64_t budget = 1u << 16) {
    CoproductResult<C> out;
    for (auto const* a : {&r, &s, &t}) {
      if (!a->commutative) {
        out.report.refuse("commutative inputs", "coproduct check needs commutative algebras");
        return out;
      }
    }
    auto const fr = check_algebra_map(c, f, r, t);
    auto const gr = check_algebra_map(c, g, s, t);
    if (!fr.passed() || !gr.passed()) {
      out.report.merge(fr, "f");
      out.report.merge(gr, "g");
      out.report.refuse("algebra map inputs", "f or g is not an algebra map");
      return out;
    }
    auto const rs  = tensor_algebras(c, r, s);
    auto const h   = c.compose(t.mu, c.tensor(f, g));
    auto const in1 = c.tensor(c.identity(r.carrier), s.eta);
    auto const in2 = c.tensor(r.eta, c.identity(s.carrier));
    out.report.merge(check_algebra_map(c, h, rs, t), "h");
    detail::expect_equal(out.report, c, "h∘(id⊗η_S) = f", c.compose(h, in1), f);
    detail::expect_equal(out.report, c, "h∘(η_R⊗id) = g", c.compose(h, in2), g);
    if constexpr (FiniteHomCategory<C>) {
      auto const size = c.hom_size(rs.carrier, t.carrier);
      if (size <= budget) {
        std::uint64_t count = 0;
        nlohmann::json other;
        for (auto const& k : c.enumerate_hom(rs.carrier, t.carrier)) {
          if (c.equal(c.compose(k, in1), f) && c.equal(c.compose(k, in2), g)
              && is_algebra_map(c, k, rs, t)) {
            ++count;
            if (!c.equal(k, h)) {
              other = c.to_json(k);
            }
          }
        }
        out.solutions = count;
        out.report.expect(count == 1 && other.is_null(), "uniqueness",
                          std::to_string(size) + " candidates, "
                              + std::to_string(count) + " solutions",
                          other.is_null() ? nlohmann::json() : nlohmann::json{{"other", other}});
      } else {
        out.report.skip("uniqueness", "hom-set exceeds enumeration budget");
      }
    } else {
      out.report.skip("uniqueness", "hom-sets are not enumerable");
    }
    out.map = h;
    return out;
  }

}  // namespace catcheck
