#pragma once

#include <cstddef>
#include <vector>

#include "catcheck/finite_category.hpp"
#include "catcheck/report.hpp"
#include "catcheck/simplicial/coherent_cube.hpp"
#include "catcheck/simplicial/simplicial_set.hpp"

namespace catcheck {

  // A simplicial object in finite categories truncated at D: levels
  // C_0..C_D on a shared object set, with faces and degeneracies given on
  // morphisms and constant on objects.
  class SimplicialCategory {
   public:
    // faces[k][i][f] : C_k → C_{k-1}, degeneracies[k][i][f] : C_k → C_{k+1}
    using Tables = TruncatedSimplicialSet::Tables;

    // Checks table shapes only; check_axioms does the rest.
    SimplicialCategory(std::vector<FiniteCategory> levels, Tables faces, Tables degeneracies);

    // Every level C, every face and degeneracy the identity.
    static SimplicialCategory discrete(FiniteCategory const& c, std::size_t dim);
    // Levelwise product; (f, g) is f*|mor B_k| + g and objects likewise.
    static SimplicialCategory product(SimplicialCategory const& a, SimplicialCategory const& b);
    // 𝔠[Δⁿ] truncated at dim.
    static SimplicialCategory from_cube(CoherentCube const& cube, std::size_t dim);

    [[nodiscard]] std::size_t dimension() const noexcept {
      return _levels.size() - 1;
    }
    [[nodiscard]] std::size_t object_count() const noexcept {
      return _levels.front().object_count();
    }
    [[nodiscard]] FiniteCategory const& level(std::size_t k) const {
      return _levels.at(k);
    }
    [[nodiscard]] std::size_t face(std::size_t k, std::size_t i, std::size_t f) const {
      return _faces.at(k).at(i).at(f);
    }
    [[nodiscard]] std::size_t degeneracy(std::size_t k, std::size_t i, std::size_t f) const {
      return _degeneracies.at(k).at(i).at(f);
    }

    // Constant: every level the same category and every structure map the
    // identity.
    [[nodiscard]] bool is_discrete() const;

    // Each level is a category, faces and degeneracies are functors fixing
    // objects, and the simplicial identities hold on morphisms.
    [[nodiscard]] CheckReport check_axioms() const;

    // Map(x, y): level k is C_k(x, y).
    [[nodiscard]] TruncatedSimplicialSet mapping_space(std::size_t x, std::size_t y) const;

    // Every mapping space fills all horns up to dim.
    [[nodiscard]] CheckReport check_fibrant(std::size_t dim) const;

   private:
    std::vector<FiniteCategory> _levels;
    Tables                      _faces;
    Tables                      _degeneracies;
  };

  // A simplicial functor: objects and, per level, morphisms.
  struct SimplicialFunctor {
    std::vector<std::size_t>              objects;
    std::vector<std::vector<std::size_t>> levels;
  };

  [[nodiscard]] SimplicialFunctor identity_functor(SimplicialCategory const& c);
  // f × g on products A × B → A' × B', indexed as in product().
  [[nodiscard]] SimplicialFunctor product_functor(SimplicialFunctor const&  f,
                                                  SimplicialFunctor const&  g,
                                                  SimplicialCategory const& g_source,
                                                  SimplicialCategory const& g_target);
  // Levelwise functoriality plus commuting with faces and degeneracies.
  [[nodiscard]] CheckReport check_functor(SimplicialFunctor const&  f,
                                          SimplicialCategory const& source,
                                          SimplicialCategory const& target);

}  // namespace catcheck
