#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/operators/pointed_map.hpp"
#include "catcheck/operators/set_operad.hpp"
#include "catcheck/report.hpp"

namespace catcheck {

  // A morphism [m]_+ → [n]_+ of O^⊗: a pointed map α with an operation
  // θ_j ∈ O(|α⁻¹(j)|) for each j. The letters of θ_j number α⁻¹(j) in
  // increasing order.
  struct OperadMorphism {
    PointedMap               map;
    std::vector<std::size_t> operations;

    friend bool operator==(OperadMorphism const&, OperadMorphism const&) = default;
  };

  // O^⊗ for a set operad O: objects are arities, and the hom-set from
  // [m]_+ to [n]_+ is ∐_α ∏_j O(|α⁻¹(j)|).
  class OperadOperatorCategory {
   public:
    using Object   = std::size_t;
    using Morphism = OperadMorphism;

    explicit OperadOperatorCategory(SetOperad operad) : _operad(std::move(operad)) {}

    [[nodiscard]] SetOperad const& operad() const noexcept {
      return _operad;
    }

    // Throws ShapeError on a wrong operation count, BoundError when a
    // preimage exceeds the operad's arity bound.
    [[nodiscard]] Morphism make(PointedMap alpha, std::vector<std::size_t> operations) const;

    [[nodiscard]] Morphism identity(Object n) const;
    // outer ∘ inner: component k is γ(ψ_k; φ_j for j ∈ β⁻¹(k)) relabelled
    // from block order to increasing order of (βα)⁻¹(k).
    [[nodiscard]] Morphism compose(Morphism const& outer, Morphism const& inner) const;
    [[nodiscard]] Object   domain(Morphism const& f) const noexcept {
      return f.map.source();
    }
    [[nodiscard]] Object codomain(Morphism const& f) const noexcept {
      return f.map.target();
    }
    [[nodiscard]] bool equal(Morphism const& f, Morphism const& g) const {
      return f == g;
    }

    // The morphism over α whose every operation is the word 0 1 2 ...
    [[nodiscard]] Morphism canonical_over(PointedMap const& alpha) const;

    [[nodiscard]] std::uint64_t         hom_size(Object m, Object n) const;
    [[nodiscard]] std::vector<Morphism> enumerate_hom(Object m, Object n) const;
    [[nodiscard]] std::vector<Morphism> enumerate_hom_over(PointedMap const& alpha) const;

    // The projection to Fin_* is bijective on every hom-set and functorial
    // on every composable pair, for arities up to `max_arity`.
    [[nodiscard]] CheckReport check_projection_isomorphism(std::size_t max_arity) const;

    [[nodiscard]] nlohmann::json to_json(Morphism const& f) const;
    [[nodiscard]] nlohmann::json object_json(Object n) const {
      return n;
    }
    [[nodiscard]] std::string render(Morphism const& f) const;

   private:
    SetOperad _operad;
  };

}  // namespace catcheck
