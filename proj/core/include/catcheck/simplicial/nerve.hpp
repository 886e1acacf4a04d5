#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "catcheck/finite_category.hpp"
#include "catcheck/simplicial/simplicial_set.hpp"

namespace catcheck {

  // N(C) truncated at D. A 0-simplex is an object; a k-simplex for k ≥ 1 is
  // a composable chain (f_1, ..., f_k), f_{t+1}∘f_t defined. Faces compose
  // or drop an end, degeneracies insert identities.
  struct Nerve {
    TruncatedSimplicialSet                        set;
    // chains[k][x]: the object for k = 0, else the k morphisms.
    std::vector<std::vector<std::vector<std::size_t>>> chains;
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;
  };

  [[nodiscard]] Nerve nerve(FiniteCategory const& c, std::size_t dim);

  // The simplicial map N(F) for a functor given on morphisms (and objects).
  [[nodiscard]] SimplicialMap nerve_map(Nerve const&                    source,
                                        Nerve const&                    target,
                                        std::vector<std::size_t> const& on_objects,
                                        std::vector<std::size_t> const& on_morphisms);

}  // namespace catcheck
