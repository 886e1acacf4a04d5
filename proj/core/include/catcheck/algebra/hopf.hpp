#pragma once

#include <optional>
#include <string>

#include "catcheck/algebra/algebra.hpp"

namespace catcheck {

  // Unitors are strict, so 𝟙⊗R, R and R⊗𝟙 are one object and formulas such
  // as (ε⊗id)∘sh⁻¹∘(id⊗η) are read as endomorphisms of R. This is the only
  // place the algebra layer relies on strictness.

  namespace detail {

    template <SymmetricMonoidalCategory C>
    void require_bialgebra(C const& c, Bialgebra<C> const& b) {
      auto const report = check_bialgebra(c, b);
      if (auto const* bad = report.first_failure()) {
        throw PreconditionError("not a bialgebra: " + bad->name + " fails");
      }
    }

  }  // namespace detail

  // (id⊗μ)∘(δ⊗id) : R⊗R → R⊗R
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Morphism right_shear(C const&            c,
                                                 Bialgebra<C> const& b,
                                                 bool                verify = true) {
    if (verify) {
      detail::require_bialgebra(c, b);
    }
    auto const id = c.identity(b.carrier);
    return c.compose(c.tensor(id, b.mu), c.tensor(b.delta, id));
  }

  // (μ⊗id)∘(id⊗δ) : R⊗R → R⊗R
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Morphism left_shear(C const&            c,
                                                Bialgebra<C> const& b,
                                                bool                verify = true) {
    if (verify) {
      detail::require_bialgebra(c, b);
    }
    auto const id = c.identity(b.carrier);
    return c.compose(c.tensor(b.mu, id), c.tensor(id, b.delta));
  }

  template <SymmetricMonoidalCategory C>
  struct HopfDecision {
    bool                                hopf = false;
    Invertibility<typename C::Morphism> right;
    Invertibility<typename C::Morphism> left;
    CheckReport                         report;
  };

  // Hopf iff the right shear is invertible. The left shear is decided too
  // and a disagreement is reported as a failure of its own.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] HopfDecision<C> is_hopf(C const& c, Bialgebra<C> const& b) {
    detail::require_bialgebra(c, b);
    HopfDecision<C> out;
    out.right = c.is_invertible(right_shear(c, b, false));
    out.left  = c.is_invertible(left_shear(c, b, false));
    out.hopf  = out.right.invertible;
    if (out.right.invertible) {
      out.report.pass("right shear invertible");
    } else {
      out.report.fail("right shear invertible", "right shear has no inverse",
                      to_json(*out.right.witness));
    }
    if (out.left.invertible == out.right.invertible) {
      out.report.pass("left shear agrees",
                      out.left.invertible ? "left shear invertible"
                                          : "left shear not invertible");
    } else {
      out.report.fail("left shear agrees",
                      "right and left shears disagree on invertibility",
                      out.left.witness ? to_json(*out.left.witness) : nlohmann::json());
    }
    return out;
  }

  // μ∘(α⊗id)∘δ = η∘ε = μ∘(id⊗α)∘δ
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CheckReport check_antipode(C const&                    c,
                                           Bialgebra<C> const&         b,
                                           typename C::Morphism const& alpha) {
    detail::require_shape(c, alpha, b.carrier, b.carrier, "antipode");
    CheckReport report;
    auto const  id     = c.identity(b.carrier);
    auto const  target = c.compose(b.eta, b.epsilon);
    detail::expect_equal(report, c, "μ∘(α⊗id)∘δ = η∘ε",
                         c.compose(b.mu, c.compose(c.tensor(alpha, id), b.delta)), target);
    detail::expect_equal(report, c, "μ∘(id⊗α)∘δ = η∘ε",
                         c.compose(b.mu, c.compose(c.tensor(id, alpha), b.delta)), target);
    return report;
  }

  template <SymmetricMonoidalCategory C>
  struct Derived {
    std::optional<typename C::Morphism> value;
    CheckReport                         report;
  };

  // α = (ε⊗id)∘sh⁻¹∘(id⊗η), then checked as an antipode. Refuses with the
  // kernel, collision or omission witness when the shear is not invertible.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] Derived<C> antipode_from_shear(C const& c, Bialgebra<C> const& b) {
    Derived<C> out;
    auto const inv = c.is_invertible(right_shear(c, b));
    if (!inv.invertible) {
      out.report.refuse("antipode from shear", "right shear is not invertible",
                        to_json(*inv.witness));
      return out;
    }
    auto const id    = c.identity(b.carrier);
    auto const alpha = c.compose(c.tensor(b.epsilon, id),
                                 c.compose(*inv.inverse, c.tensor(id, b.eta)));
    out.report.merge(check_antipode(c, b, alpha), "antipode");
    out.value = alpha;
    return out;
  }

  // φ = (id⊗μ)∘(id⊗α⊗id)∘(δ⊗id), with φ∘sh = id and sh∘φ = id asserted.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] Derived<C> shear_inverse_from_antipode(C const&                    c,
                                                       Bialgebra<C> const&         b,
                                                       typename C::Morphism const& alpha) {
    Derived<C> out;
    auto const pre = check_antipode(c, b, alpha);
    if (!pre.passed()) {
      out.report.merge(pre, "antipode");
      out.report.refuse("shear inverse", "α is not an antipode");
      return out;
    }
    auto const id  = c.identity(b.carrier);
    auto const phi = c.compose(c.tensor(id, b.mu),
                               c.compose(c.tensor(c.tensor(id, alpha), id),
                                         c.tensor(b.delta, id)));
    auto const sh  = right_shear(c, b);
    auto const rr  = c.identity(c.tensor(b.carrier, b.carrier));
    detail::expect_equal(out.report, c, "φ∘sh = id", c.compose(phi, sh), rr);
    detail::expect_equal(out.report, c, "sh∘φ = id", c.compose(sh, phi), rr);
    out.value = phi;
    return out;
  }

  // The shear identities every bialgebra satisfies:
  //   sh∘(id⊗μ) = (id⊗μ)∘(sh⊗id)     (δ⊗id)∘sh = (id⊗sh)∘(δ⊗id)
  //   sh∘(id⊗η) = δ                  (ε⊗id)∘sh = μ
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CheckReport check_shear_identities(C const& c, Bialgebra<C> const& b) {
    CheckReport report;
    auto const  sh = right_shear(c, b);
    auto const  id = c.identity(b.carrier);
    detail::expect_equal(report, c, "sh∘(id⊗μ) = (id⊗μ)∘(sh⊗id)",
                         c.compose(sh, c.tensor(id, b.mu)),
                         c.compose(c.tensor(id, b.mu), c.tensor(sh, id)));
    // The coassociative mirror of the first identity. Its other bracketing,
    // (sh⊗id)∘(δ⊗id), already differs at g⊗e in F_2[C_2].
    detail::expect_equal(report, c, "(δ⊗id)∘sh = (id⊗sh)∘(δ⊗id)",
                         c.compose(c.tensor(b.delta, id), sh),
                         c.compose(c.tensor(id, sh), c.tensor(b.delta, id)));
    detail::expect_equal(report, c, "sh∘(id⊗η) = δ",
                         c.compose(sh, c.tensor(id, b.eta)), b.delta);
    detail::expect_equal(report, c, "(ε⊗id)∘sh = μ",
                         c.compose(c.tensor(b.epsilon, id), sh), b.mu);
    return report;
  }

}  // namespace catcheck
