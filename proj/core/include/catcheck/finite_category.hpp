#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/report.hpp"

namespace catcheck {

  // A category with finitely many objects and morphisms, both numbered
  // from 0. Composition is tabulated for every composable pair.
  class FiniteCategory {
   public:
    using Object   = std::size_t;
    using Morphism = std::size_t;

    struct Arrow {
      Object      domain;
      Object      codomain;
      std::string label;
    };

    // g∘f for composable f, g.
    using ComposeFn = std::function<Morphism(Morphism g, Morphism f)>;

    // Tabulates `compose` over every composable pair. `identities[x]` must
    // be an endomorphism of x. Throws Error if a composite has the wrong
    // endpoints or an identity is not a two-sided unit.
    static FiniteCategory generate(std::vector<std::string> object_labels,
                                   std::vector<Arrow>       arrows,
                                   std::vector<Morphism>    identities,
                                   ComposeFn const&         compose);

    // One object; morphisms are the elements and g∘f = table[g][f].
    static FiniteCategory
    from_monoid(std::vector<std::vector<std::size_t>> const& table,
                std::vector<std::string>                     labels = {});
    // Objects 0..n-1 with one arrow i→j iff leq[i][j]. `leq` must be a
    // partial order (reflexive, transitive, antisymmetric).
    static FiniteCategory
    from_poset(std::vector<std::vector<bool>> const& leq,
               std::vector<std::string>              labels = {});
    // The ordinal [n] = {0 < 1 < ... < n}.
    static FiniteCategory ordinal(std::size_t n);
    static FiniteCategory product(FiniteCategory const& a,
                                  FiniteCategory const& b);

    [[nodiscard]] std::size_t object_count() const noexcept {
      return _object_labels.size();
    }
    [[nodiscard]] std::size_t morphism_count() const noexcept {
      return _arrows.size();
    }
    [[nodiscard]] Arrow const& arrow(Morphism f) const {
      return _arrows.at(f);
    }
    [[nodiscard]] std::string const& object_label(Object x) const {
      return _object_labels.at(x);
    }

    [[nodiscard]] Morphism identity(Object x) const {
      return _identities.at(x);
    }
    [[nodiscard]] bool is_identity(Morphism f) const {
      return _identities[_arrows[f].domain] == f;
    }
    // Throws CompositionError when codomain(f) != domain(g).
    [[nodiscard]] Morphism compose(Morphism g, Morphism f) const;
    [[nodiscard]] Object   domain(Morphism f) const {
      return _arrows.at(f).domain;
    }
    [[nodiscard]] Object codomain(Morphism f) const {
      return _arrows.at(f).codomain;
    }
    [[nodiscard]] bool equal(Morphism f, Morphism g) const noexcept {
      return f == g;
    }

    [[nodiscard]] std::vector<Morphism> const& hom(Object x, Object y) const {
      return _hom.at(x * object_count() + y);
    }
    [[nodiscard]] std::uint64_t hom_size(Object x, Object y) const {
      return hom(x, y).size();
    }
    [[nodiscard]] std::vector<Morphism> enumerate_hom(Object x,
                                                      Object y) const {
      return hom(x, y);
    }
    // Morphisms with the given domain, in increasing order.
    [[nodiscard]] std::vector<Morphism> const& out(Object x) const {
      return _out.at(x);
    }

    [[nodiscard]] std::optional<Morphism> inverse(Morphism f) const;
    [[nodiscard]] bool                    is_groupoid() const;

    // Exhaustive associativity over all composable triples.
    [[nodiscard]] CheckReport check_laws() const;

    [[nodiscard]] nlohmann::json to_json(Morphism f) const;
    [[nodiscard]] nlohmann::json object_json(Object x) const {
      return object_label(x);
    }

   private:
    FiniteCategory() = default;

    std::vector<std::string>           _object_labels;
    std::vector<Arrow>                 _arrows;
    std::vector<Morphism>              _identities;
    std::vector<std::vector<Morphism>> _hom;
    std::vector<std::vector<Morphism>> _out;
    // Position of each morphism inside _out[domain].
    std::vector<std::size_t> _out_position;
    // _after[f][k] = _out[codomain f][k] ∘ f
    std::vector<std::vector<Morphism>> _after;
  };

}  // namespace catcheck
