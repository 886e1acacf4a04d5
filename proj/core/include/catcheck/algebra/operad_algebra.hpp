#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "catcheck/algebra/algebra.hpp"
#include "catcheck/operators/set_operad.hpp"

namespace catcheck {

  // μ^(n) : X^{⊗n} → X, nested to the left; μ^(0) = η and μ^(1) = id.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Morphism iterated_multiplication(C const&                   c,
                                                             AlgebraStructure<C> const& a,
                                                             std::size_t                n) {
    if (n == 0) {
      return a.eta;
    }
    auto out = c.identity(a.carrier);
    for (std::size_t k = 2; k <= n; ++k) {
      out = c.compose(a.mu, c.tensor(out, c.identity(a.carrier)));
    }
    return out;
  }

  // x_0 ⊗ ... ⊗ x_{n-1} ↦ x_{w_0} ⋯ x_{w_{n-1}}, i.e. μ^(n) ∘ P_w.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Morphism ordered_multiplication(C const&                   c,
                                                            AlgebraStructure<C> const& a,
                                                            Word const&                w) {
    std::vector<typename C::Object> objects(w.size(), a.carrier);
    auto const shuffle = permute_factors(c, std::span<typename C::Object const>(objects),
                                         std::span<std::size_t const>(w));
    return c.compose(iterated_multiplication(c, a, w.size()), shuffle);
  }

  // An algebra over a set operad O: a structure map μ_θ : X^{⊗n} → X for
  // every θ ∈ O(n), n up to the operad's arity bound.
  template <SymmetricMonoidalCategory C>
  class OperadAlgebra {
   public:
    using Object   = typename C::Object;
    using Morphism = typename C::Morphism;

    // μ_θ = ordered_multiplication(word(θ)). For Comm every word is sorted.
    static OperadAlgebra from_algebra(C c, SetOperad operad, AlgebraStructure<C> const& a) {
      OperadAlgebra out(std::move(c), std::move(operad), a.carrier);
      for (std::size_t n = 0; n <= out._operad.max_arity(); ++n) {
        std::vector<Morphism> level;
        for (std::size_t e = 0; e < out._operad.size(n); ++e) {
          level.push_back(ordered_multiplication(out._c, a, out._operad.word(n, e)));
        }
        out._ops.push_back(std::move(level));
      }
      return out;
    }

    [[nodiscard]] C const& category() const noexcept {
      return _c;
    }
    [[nodiscard]] SetOperad const& operad() const noexcept {
      return _operad;
    }
    [[nodiscard]] Object const& carrier() const noexcept {
      return _carrier;
    }
    [[nodiscard]] Morphism const& operation(std::size_t n, std::size_t element) const {
      if (n >= _ops.size()) {
        throw BoundError("operation of arity " + std::to_string(n) + " above the bound "
                         + std::to_string(_operad.max_arity()));
      }
      return _ops[n].at(element);
    }

    // μ_1 = id, μ_{γ(θ;φ)} = μ_θ∘(⊗μ_{φ_i}) and μ_{θ·σ} = μ_θ∘P_σ, over every
    // tuple of total arity at most `arity_bound`.
    [[nodiscard]] CheckReport check_laws(std::size_t arity_bound) const {
      CheckReport report;
      auto const  N = std::min(arity_bound, _operad.max_arity());
      detail::expect_equal(report, _c, "unit operation", operation(1, _operad.unit()),
                           _c.identity(_carrier));

      bool        comp_ok = true;
      std::size_t comp_n  = 0;
      using Tuple         = std::vector<SetOperad::Entry>;
      Tuple                                         acc;
      std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> rec;
      rec = [&](std::size_t n, std::size_t theta, std::size_t remaining, std::size_t left) {
        if (!comp_ok) {
          return;
        }
        if (remaining == 0) {
          std::vector<Morphism> parts;
          for (auto e : acc) {
            parts.push_back(operation(e.arity, e.element));
          }
          auto const composite = _operad.compose({n, theta}, acc);
          auto const lhs       = operation(composite.arity, composite.element);
          auto const rhs       = _c.compose(operation(n, theta),
                                            tensor_all(_c, std::span<Morphism const>(parts)));
          ++comp_n;
          if (!_c.equal(lhs, rhs)) {
            comp_ok = false;
            nlohmann::json inner = nlohmann::json::array();
            for (auto e : acc) {
              inner.push_back(_operad.word(e.arity, e.element));
            }
            report.fail("composition", "μ_{γ(θ;φ)} != μ_θ∘(⊗μ_φ)",
                        {{"theta", _operad.word(n, theta)},
                         {"phi", inner},
                         {"lhs", _c.to_json(lhs)},
                         {"rhs", _c.to_json(rhs)}});
          }
          return;
        }
        for (std::size_t k = 0; k <= left; ++k) {
          for (std::size_t e = 0; e < _operad.size(k); ++e) {
            acc.push_back({k, e});
            rec(n, theta, remaining - 1, left - k);
            acc.pop_back();
          }
        }
      };
      for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t theta = 0; theta < _operad.size(n); ++theta) {
          rec(n, theta, n, N);
        }
      }
      if (comp_ok) {
        report.pass("composition", std::to_string(comp_n) + " cases");
      }

      bool        eq_ok = true;
      std::size_t eq_n  = 0;
      for (std::size_t n = 0; n <= N && eq_ok; ++n) {
        std::vector<Object> objects(n, _carrier);
        for (std::size_t theta = 0; theta < _operad.size(n) && eq_ok; ++theta) {
          for (auto const& perm : all_permutations(n)) {
            auto const lhs = operation(n, _operad.relabel(n, theta, perm));
            auto const rhs = _c.compose(operation(n, theta),
                                        permute_factors(_c, std::span<Object const>(objects),
                                                        std::span<std::size_t const>(perm)));
            ++eq_n;
            if (!_c.equal(lhs, rhs)) {
              eq_ok = false;
              report.fail("equivariance", "μ_{θ·σ} != μ_θ∘P_σ",
                          {{"theta", _operad.word(n, theta)},
                           {"sigma", perm},
                           {"lhs", _c.to_json(lhs)},
                           {"rhs", _c.to_json(rhs)}});
              break;
            }
          }
        }
      }
      if (eq_ok) {
        report.pass("equivariance", std::to_string(eq_n) + " cases");
      }
      return report;
    }

   private:
    OperadAlgebra(C c, SetOperad operad, Object carrier)
        : _c(std::move(c)), _operad(std::move(operad)), _carrier(std::move(carrier)) {}

    C                                  _c;
    SetOperad                          _operad;
    Object                             _carrier;
    std::vector<std::vector<Morphism>> _ops;
  };

  // f∘μ_θ = μ'_θ∘f^{⊗n} for every θ of arity at most `arity_bound`.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] CheckReport check_algebra_map(typename C::Morphism const& f,
                                              OperadAlgebra<C> const&     r,
                                              OperadAlgebra<C> const&     s,
                                              std::size_t                 arity_bound) {
    auto const& c = r.category();
    detail::require_shape(c, f, r.carrier(), s.carrier(), "algebra map");
    CheckReport report;
    auto const  N  = std::min(arity_bound, r.operad().max_arity());
    bool        ok = true;
    std::size_t cases = 0;
    for (std::size_t n = 0; n <= N && ok; ++n) {
      auto const fn = tensor_power(c, f, n);
      for (std::size_t theta = 0; theta < r.operad().size(n); ++theta) {
        auto const lhs = c.compose(f, r.operation(n, theta));
        auto const rhs = c.compose(s.operation(n, theta), fn);
        ++cases;
        if (!c.equal(lhs, rhs)) {
          ok = false;
          report.fail("preserves operations", "f∘μ_θ != μ'_θ∘f^⊗n",
                      {{"theta", r.operad().word(n, theta)},
                       {"lhs", c.to_json(lhs)},
                       {"rhs", c.to_json(rhs)}});
          break;
        }
      }
    }
    if (ok) {
      report.pass("preserves operations", std::to_string(cases) + " operations");
    }
    return report;
  }

}  // namespace catcheck
