#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/report.hpp"

namespace catcheck {

  // A simplicial set truncated at dimension D: finite levels X_0..X_D with
  // faces d_i : X_k → X_{k-1} (1 ≤ k ≤ D) and degeneracies
  // s_i : X_k → X_{k+1} (k < D), each a table indexed by simplex number.
  class TruncatedSimplicialSet {
   public:
    // faces[k][i][x] for k in 1..D (faces[0] empty),
    // degeneracies[k][i][x] for k in 0..D-1 (degeneracies[D] empty).
    using Tables = std::vector<std::vector<std::vector<std::size_t>>>;

    TruncatedSimplicialSet(std::vector<std::size_t>              sizes,
                           Tables                                faces,
                           Tables                                degeneracies,
                           std::vector<std::vector<std::string>> labels = {});

    [[nodiscard]] std::size_t dimension() const noexcept {
      return _sizes.size() - 1;
    }
    [[nodiscard]] std::size_t size(std::size_t k) const {
      return _sizes.at(k);
    }
    [[nodiscard]] std::size_t face(std::size_t k, std::size_t i, std::size_t x) const {
      return _faces.at(k).at(i).at(x);
    }
    [[nodiscard]] std::size_t degeneracy(std::size_t k, std::size_t i, std::size_t x) const {
      return _degeneracies.at(k).at(i).at(x);
    }
    // x lies in the image of some degeneracy.
    [[nodiscard]] bool is_degenerate(std::size_t k, std::size_t x) const {
      return _degenerate.at(k).at(x);
    }
    [[nodiscard]] std::size_t nondegenerate_count(std::size_t k) const;
    [[nodiscard]] std::string const& label(std::size_t k, std::size_t x) const {
      return _labels.at(k).at(x);
    }

    // Every simplicial identity whose two sides stay within the bound.
    [[nodiscard]] CheckReport check_identities() const;

    // {"dimension": D, "levels": [{"size", "labels", "degenerate", "faces",
    // "degeneracies"}, ...]}
    [[nodiscard]] nlohmann::json         to_json() const;
    static TruncatedSimplicialSet        from_json(nlohmann::json const& j);

    friend bool operator==(TruncatedSimplicialSet const& a,
                           TruncatedSimplicialSet const& b) {
      return a._sizes == b._sizes && a._faces == b._faces
             && a._degeneracies == b._degeneracies;
    }

   private:
    std::vector<std::size_t>              _sizes;
    Tables                                _faces;
    Tables                                _degeneracies;
    std::vector<std::vector<std::string>> _labels;
    std::vector<std::vector<bool>>        _degenerate;
  };

  // Level maps X_k → Y_k.
  struct SimplicialMap {
    std::vector<std::vector<std::size_t>> levels;
  };

  // f commutes with every face and degeneracy of the common truncation.
  [[nodiscard]] CheckReport check_simplicial_map(TruncatedSimplicialSet const& x,
                                                 TruncatedSimplicialSet const& y,
                                                 SimplicialMap const&          f);

  // Bijective in every level and simplicial.
  [[nodiscard]] CheckReport check_isomorphism(TruncatedSimplicialSet const& x,
                                              TruncatedSimplicialSet const& y,
                                              SimplicialMap const&          f);

  // Δⁿ truncated at D: k-simplices are monotone maps [k] → [n], listed in
  // lexicographic order of their value sequences.
  [[nodiscard]] TruncatedSimplicialSet standard_simplex(std::size_t n, std::size_t dim);
  [[nodiscard]] std::vector<std::vector<std::size_t>> monotone_maps(std::size_t k,
                                                                    std::size_t n);

  // Levelwise product; the pair (a, b) is a*|Y_k| + b.
  [[nodiscard]] TruncatedSimplicialSet product(TruncatedSimplicialSet const& x,
                                               TruncatedSimplicialSet const& y);

}  // namespace catcheck
