#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/category.hpp"
#include "catcheck/matrix.hpp"
#include "catcheck/ring.hpp"

namespace catcheck {

  // Finite-dimensional vector spaces F^n over an exact ring, with matrices
  // as morphisms. Objects are dimensions; the tensor product is n*m on
  // objects and the Kronecker product on morphisms, with basis vector
  // e_i ⊗ e_k of F^n ⊗ F^m at index i*m + k. With this flattening the
  // structure is strict: F^1 is the unit and (f⊗g)⊗h == f⊗(g⊗h) exactly.
  class MatrixCategory {
   public:
    using Object   = std::size_t;
    using Morphism = Matrix;

    // Largest hom-set enumerate_hom will materialise.
    static constexpr std::uint64_t kDefaultEnumerationLimit = 1u << 20;

    explicit MatrixCategory(Ring ring) : _ring(ring) {}

    [[nodiscard]] Ring const& ring() const noexcept {
      return _ring;
    }

    [[nodiscard]] Matrix identity(Object a) const {
      return Matrix::identity(_ring, a);
    }
    [[nodiscard]] Matrix compose(Matrix const& g, Matrix const& f) const;
    [[nodiscard]] Object domain(Matrix const& f) const noexcept {
      return f.cols();
    }
    [[nodiscard]] Object codomain(Matrix const& f) const noexcept {
      return f.rows();
    }
    [[nodiscard]] bool equal(Matrix const& f, Matrix const& g) const {
      return f == g;
    }

    [[nodiscard]] Object unit() const noexcept {
      return 1;
    }
    [[nodiscard]] Object tensor(Object a, Object b) const noexcept {
      return a * b;
    }
    [[nodiscard]] Matrix tensor(Matrix const& f, Matrix const& g) const;
    // σ_{A,B}: e_i ⊗ e_k ↦ e_k ⊗ e_i.
    [[nodiscard]] Matrix braiding(Object a, Object b) const;
    [[nodiscard]] Matrix permute_factors(std::span<Object const>      objects,
                                         std::span<std::size_t const> perm) const;

    [[nodiscard]] Invertibility<Matrix> is_invertible(Matrix const& f) const;

    [[nodiscard]] Matrix zero(Object from, Object to) const {
      return Matrix(_ring, to, from);
    }

    [[nodiscard]] std::uint64_t       hom_size(Object a, Object b) const;
    [[nodiscard]] std::vector<Matrix> enumerate_hom(Object a, Object b) const;

    [[nodiscard]] nlohmann::json to_json(Matrix const& f) const;
    [[nodiscard]] nlohmann::json object_json(Object a) const {
      return a;
    }

    friend bool operator==(MatrixCategory const&,
                           MatrixCategory const&) = default;

   private:
    void require_instance(Matrix const& f) const;

    Ring _ring;
  };

}  // namespace catcheck
