#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/category.hpp"

namespace catcheck {

  // A total function {0..domain-1} → {0..codomain-1} as a lookup table.
  struct Function {
    std::size_t              domain   = 0;
    std::size_t              codomain = 0;
    std::vector<std::size_t> table;

    [[nodiscard]] std::size_t operator()(std::size_t x) const {
      return table[x];
    }
    // Throws ShapeError when a value is outside the codomain.
    static Function from_table(std::size_t              codomain,
                               std::vector<std::size_t> table);

    friend bool operator==(Function const&, Function const&) = default;
  };

  // Finite sets {0..n-1} under cartesian product. The pair (i, k) of
  // A × B is the element i*|B| + k, which makes the product strictly
  // associative with the one-point set as a strict unit.
  class FinSetCategory {
   public:
    using Object   = std::size_t;
    using Morphism = Function;

    static constexpr std::uint64_t kDefaultEnumerationLimit = 1u << 20;

    [[nodiscard]] Function identity(Object a) const;
    [[nodiscard]] Function compose(Function const& g, Function const& f) const;
    [[nodiscard]] Object   domain(Function const& f) const noexcept {
      return f.domain;
    }
    [[nodiscard]] Object codomain(Function const& f) const noexcept {
      return f.codomain;
    }
    [[nodiscard]] bool equal(Function const& f, Function const& g) const {
      return f == g;
    }

    [[nodiscard]] Object unit() const noexcept {
      return 1;
    }
    [[nodiscard]] Object tensor(Object a, Object b) const noexcept {
      return a * b;
    }
    [[nodiscard]] Function tensor(Function const& f, Function const& g) const;
    [[nodiscard]] Function braiding(Object a, Object b) const;
    [[nodiscard]] Function
    permute_factors(std::span<Object const>      objects,
                    std::span<std::size_t const> perm) const;

    // Bijectivity test. Non-invertible functions carry a Collision or an
    // Omission; a size mismatch between domain and codomain is reported
    // with the first of these that exists.
    [[nodiscard]] Invertibility<Function> is_invertible(Function const& f) const;

    // The diagonal a ↦ (a, a) and the unique map to the point.
    [[nodiscard]] Function diagonal(Object a) const;
    [[nodiscard]] Function terminal(Object a) const;
    // The map 1 → A picking `element`.
    [[nodiscard]] Function point(Object a, std::size_t element) const;

    [[nodiscard]] std::uint64_t         hom_size(Object a, Object b) const;
    [[nodiscard]] std::vector<Function> enumerate_hom(Object a,
                                                      Object b) const;

    [[nodiscard]] nlohmann::json to_json(Function const& f) const;
    [[nodiscard]] nlohmann::json object_json(Object a) const {
      return a;
    }

    friend bool operator==(FinSetCategory const&,
                           FinSetCategory const&) = default;
  };

}  // namespace catcheck
