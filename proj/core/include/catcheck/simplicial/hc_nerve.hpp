#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "catcheck/report.hpp"
#include "catcheck/simplicial/coherent_cube.hpp"
#include "catcheck/simplicial/nerve.hpp"
#include "catcheck/simplicial/simplicial_category.hpp"

namespace catcheck {

  // A simplicial functor 𝔠[Δⁿ] → C_•: objects x_0..x_n and, for every level
  // k, every pair i < j and every k-chain of hom(i, j) (in CoherentCube
  // order), a morphism of C_k(x_i, x_j). Identity chains are not stored.
  struct HcSimplex {
    std::vector<std::size_t>                           objects;
    std::vector<std::vector<std::vector<std::size_t>>> values;  // [k][pair][chain]

    friend auto operator<=>(HcSimplex const&, HcSimplex const&) = default;
  };

  // Every simplicial functor 𝔠[Δⁿ] → C_•, for n ≤ min(3, dim C_•). Values
  // on degenerate chains and on chains that factor through an intermediate
  // vertex are forced; the remaining chains are chosen level by level with
  // face constraints, and every candidate is finally checked in full.
  [[nodiscard]] std::vector<HcSimplex> hc_nerve_simplices(SimplicialCategory const& c,
                                                          std::size_t               n);

  // N^s(C_•) truncated at min(3, dim C_•) (or at `dim` when smaller).
  struct HcNerve {
    TruncatedSimplicialSet                       set;
    std::vector<std::vector<HcSimplex>>          simplices;
    std::vector<std::map<HcSimplex, std::size_t>> index;
  };

  [[nodiscard]] HcNerve hc_nerve(SimplicialCategory const& c, std::size_t dim);

  // F ∘ 𝔠[θ] for θ : [m] → [n] monotone.
  [[nodiscard]] HcSimplex restrict_along(SimplicialCategory const&       c,
                                         HcSimplex const&                f,
                                         std::vector<std::size_t> const& theta);

  // For discrete C_•: F ↦ (F{0,1}, F{1,2}, ...) at level 0, a map
  // N^s(C_•) → N(C_0).
  [[nodiscard]] SimplicialMap discrete_identification(HcNerve const& hc, Nerve const& n);

  // The map Δⁿ × N^s(C_•) → N^s(𝔠[Δⁿ] × C_•), (θ, F) ↦ (𝔠[θ], F), where
  // `target` is hc_nerve(SimplicialCategory::product(from_cube(Δⁿ), C_•)).
  [[nodiscard]] SimplicialMap adjunction_unit(std::size_t               n,
                                              SimplicialCategory const& c,
                                              HcNerve const&            source,
                                              HcNerve const&            target);

  // N^s(F) for a simplicial functor F : C_• → D_•.
  [[nodiscard]] SimplicialMap hc_nerve_map(SimplicialFunctor const& f,
                                           HcNerve const&           source,
                                           HcNerve const&           target);

  // The levelwise pair (i, j) numbering used by HcSimplex::values.
  [[nodiscard]] std::size_t hc_pair_index(std::size_t n, std::size_t i, std::size_t j);

}  // namespace catcheck
