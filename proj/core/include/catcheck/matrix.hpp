#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "catcheck/ring.hpp"
#include "catcheck/witness.hpp"

namespace catcheck {

  // A dense exact matrix over a Ring, read as a linear map from
  // F^cols to F^rows acting on column vectors. Entries are stored row-major
  // and always in canonical form for the ring.
  class Matrix {
   public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols);

    static Matrix identity(Ring ring, std::size_t n);
    // Basis vector e_j goes to e_{image[j]}; image.size() columns, `rows`
    // rows.
    static Matrix from_function(Ring                         ring,
                                std::span<std::size_t const> image,
                                std::size_t                  rows);
    // Rows of integers, reduced into the ring. All rows must have equal
    // length; `cols` fixes the width when there are no rows.
    static Matrix from_rows(Ring                                         ring,
                            std::vector<std::vector<std::int64_t>> const& rows,
                            std::size_t cols = 0);
    static Matrix
    from_rows(Ring ring,
              std::initializer_list<std::initializer_list<std::int64_t>> rows);

    [[nodiscard]] Ring const& ring() const noexcept {
      return _ring;
    }
    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    [[nodiscard]] Scalar at(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }
    // `value` is reduced into the ring first.
    void set(std::size_t i, std::size_t j, Scalar value);
    void set_int(std::size_t i, std::size_t j, std::int64_t value) {
      set(i, j, _ring.from_int(value));
    }

    [[nodiscard]] std::vector<Scalar> const& entries() const noexcept {
      return _entries;
    }
    [[nodiscard]] bool is_zero() const noexcept;

    // Throws InstanceMismatch / CompositionError.
    [[nodiscard]] Matrix operator*(Matrix const& rhs) const;
    [[nodiscard]] std::vector<Scalar> apply(std::span<Scalar const> v) const;

    // Rows i*rhs.rows()+k, columns j*rhs.cols()+l: row-major lexicographic.
    [[nodiscard]] Matrix kronecker(Matrix const& rhs) const;

    // Gauss-Jordan elimination. Square full-rank matrices return their
    // inverse; singular square ones a nonzero kernel vector; non-square
    // ones a ShapeWitness.
    [[nodiscard]] Invertibility<Matrix> invert() const;
    [[nodiscard]] std::size_t           rank() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    Ring                _ring;
    std::size_t         _rows;
    std::size_t         _cols;
    std::vector<Scalar> _entries;
  };

}  // namespace catcheck
