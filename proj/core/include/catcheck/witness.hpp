#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/ring.hpp"

namespace catcheck {

  // Nonzero vector v with M v = 0.
  struct KernelVector {
    Ring                ring;
    std::vector<Scalar> entries;
  };

  // Two distinct domain points with the same image.
  struct Collision {
    std::size_t first;
    std::size_t second;
    std::size_t image;
  };

  // A codomain point outside the image.
  struct Omission {
    std::size_t missing;
  };

  // Domain and codomain sizes that cannot support an inverse.
  struct ShapeWitness {
    std::size_t domain;
    std::size_t codomain;
  };

  using Witness = std::variant<KernelVector, Collision, Omission, ShapeWitness>;

  [[nodiscard]] nlohmann::json to_json(Witness const& w);

  template <typename Morphism>
  struct Invertibility {
    bool                    invertible = false;
    std::optional<Morphism> inverse;
    std::optional<Witness>  witness;
  };

}  // namespace catcheck
