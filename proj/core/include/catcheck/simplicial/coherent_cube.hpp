#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catcheck/finite_category.hpp"
#include "catcheck/simplicial/simplicial_set.hpp"

namespace catcheck {

  // A k-simplex of N(P_{i,j}): subsets S_0 ⊆ ... ⊆ S_k of {i..j}, each
  // containing i and j, stored as bit masks.
  using CubeChain = std::vector<std::uint32_t>;

  // 𝔠[Δⁿ]: objects 0..n, hom(i, j) the nerve of the poset P_{i,j} of subsets
  // of {i..j} containing both ends, composition the levelwise union.
  // hom(i, i) is the point {i}; hom(i, j) is empty for i > j.
  class CoherentCube {
   public:
    static constexpr std::size_t max_n = 8;

    explicit CoherentCube(std::size_t n);

    [[nodiscard]] std::size_t n() const noexcept {
      return _n;
    }
    // P_{i,j} ordered by size, then by mask.
    [[nodiscard]] std::vector<std::uint32_t> const& subsets(std::size_t i, std::size_t j) const;
    // Every k-simplex of hom(i, j), i ≤ j, in a fixed order.
    [[nodiscard]] std::vector<CubeChain> chains(std::size_t i, std::size_t j, std::size_t k) const;

    // Every k-chain of every hom(i, j), i ≤ j, numbered in the order i, j,
    // then chains(i, j, k). This is the morphism numbering of level k of
    // SimplicialCategory::from_cube.
    [[nodiscard]] std::map<CubeChain, std::size_t> level_index(std::size_t k) const;

    [[nodiscard]] static CubeChain identity(std::size_t i, std::size_t k);
    // g∘f for f in hom(i, j), g in hom(j, l) at the same level.
    [[nodiscard]] static CubeChain compose(CubeChain const& g, CubeChain const& f);
    [[nodiscard]] static CubeChain face(CubeChain const& c, std::size_t t);
    [[nodiscard]] static CubeChain degeneracy(CubeChain const& c, std::size_t t);
    [[nodiscard]] static std::size_t source(CubeChain const& c);
    [[nodiscard]] static std::size_t target(CubeChain const& c);
    // Smallest l strictly between the ends with l ∈ S_0; c then factors as
    // the restrictions to {i..l} and {l..j}.
    [[nodiscard]] static std::optional<std::size_t> split_point(CubeChain const& c);
    [[nodiscard]] static std::pair<CubeChain, CubeChain> split(CubeChain const& c,
                                                               std::size_t      l);
    // 𝔠[θ] on a chain, for θ : [m] → [n] monotone given by its values.
    [[nodiscard]] static CubeChain apply(std::vector<std::size_t> const& theta,
                                         CubeChain const&                c);
    [[nodiscard]] static std::string render(CubeChain const& c);

    // P_{i,j} as a poset category, and its nerve truncated at dim.
    [[nodiscard]] FiniteCategory         poset(std::size_t i, std::size_t j) const;
    [[nodiscard]] TruncatedSimplicialSet hom(std::size_t i, std::size_t j, std::size_t dim) const;

   private:
    std::size_t                                          _n;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> _subsets;
  };

}  // namespace catcheck
