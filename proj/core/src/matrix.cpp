#include "catcheck/matrix.hpp"

#include <sstream>

#include "catcheck/error.hpp"

namespace catcheck {

  namespace {
    void require_same_ring(Ring const& a, Ring const& b) {
      if (!(a == b)) {
        throw InstanceMismatch("matrices over " + a.name() + " and "
                               + b.name() + " cannot be combined");
      }
    }
  }  // namespace

  Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : _ring(ring),
        _rows(rows),
        _cols(cols),
        _entries(rows * cols, ring.zero()) {}

  Matrix Matrix::identity(Ring ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m._entries[i * n + i] = ring.one();
    }
    return m;
  }

  Matrix Matrix::from_function(Ring                         ring,
                               std::span<std::size_t const> image,
                               std::size_t                  rows) {
    Matrix m(ring, rows, image.size());
    for (std::size_t j = 0; j < image.size(); ++j) {
      if (image[j] >= rows) {
        throw ShapeError("function value " + std::to_string(image[j])
                         + " outside codomain of size "
                         + std::to_string(rows));
      }
      m._entries[image[j] * m._cols + j] = ring.one();
    }
    return m;
  }

  Matrix Matrix::from_rows(Ring                                          ring,
                           std::vector<std::vector<std::int64_t>> const& rows,
                           std::size_t                                   cols) {
    if (!rows.empty()) {
      cols = rows.front().size();
    }
    Matrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw ShapeError("ragged matrix: row " + std::to_string(i) + " has "
                         + std::to_string(rows[i].size())
                         + " entries, expected " + std::to_string(cols));
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m._entries[i * cols + j] = ring.from_int(rows[i][j]);
      }
    }
    return m;
  }

  Matrix Matrix::from_rows(
      Ring ring,
      std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<std::int64_t>> v;
    for (auto const& r : rows) {
      v.emplace_back(r);
    }
    return from_rows(ring, v);
  }

  void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
    if (!_ring.is_canonical(value)) {
      value = _ring.from_fraction(value.num, value.den);
    }
    _entries[i * _cols + j] = value;
  }

  bool Matrix::is_zero() const noexcept {
    for (auto const& e : _entries) {
      if (e.num != 0) {
        return false;
      }
    }
    return true;
  }

  Matrix Matrix::operator*(Matrix const& rhs) const {
    require_same_ring(_ring, rhs._ring);
    if (_cols != rhs._rows) {
      throw CompositionError("cannot compose " + std::to_string(_rows) + "x"
                             + std::to_string(_cols) + " after "
                             + std::to_string(rhs._rows) + "x"
                             + std::to_string(rhs._cols));
    }
    Matrix out(_ring, _rows, rhs._cols);
    // Skipping zero entries of the left factor keeps permutation and
    // group-algebra products close to linear in the number of nonzeros.
    for (std::size_t i = 0; i < _rows; ++i) {
      Scalar* orow = out._entries.data() + i * out._cols;
      for (std::size_t k = 0; k < _cols; ++k) {
        Scalar const a = _entries[i * _cols + k];
        if (a.num == 0) {
          continue;
        }
        Scalar const* brow = rhs._entries.data() + k * rhs._cols;
        for (std::size_t j = 0; j < rhs._cols; ++j) {
          if (brow[j].num != 0) {
            orow[j] = _ring.add(orow[j], _ring.mul(a, brow[j]));
          }
        }
      }
    }
    return out;
  }

  std::vector<Scalar> Matrix::apply(std::span<Scalar const> v) const {
    if (v.size() != _cols) {
      throw ShapeError("vector of length " + std::to_string(v.size())
                       + " applied to a matrix with "
                       + std::to_string(_cols) + " columns");
    }
    std::vector<Scalar> out(_rows, _ring.zero());
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        out[i] = _ring.add(out[i], _ring.mul(at(i, j), v[j]));
      }
    }
    return out;
  }

  Matrix Matrix::kronecker(Matrix const& rhs) const {
    require_same_ring(_ring, rhs._ring);
    Matrix out(_ring, _rows * rhs._rows, _cols * rhs._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        Scalar const a = at(i, j);
        if (a.num == 0) {
          continue;
        }
        for (std::size_t k = 0; k < rhs._rows; ++k) {
          for (std::size_t l = 0; l < rhs._cols; ++l) {
            Scalar const b = rhs.at(k, l);
            if (b.num != 0) {
              out._entries[(i * rhs._rows + k) * out._cols + j * rhs._cols
                           + l]
                  = _ring.mul(a, b);
            }
          }
        }
      }
    }
    return out;
  }

  namespace {
    // Reduced row echelon form of [A | B] in place; returns pivot columns
    // of the A block.
    std::vector<std::size_t> rref(Ring const&          ring,
                                  std::vector<Scalar>& m,
                                  std::size_t          rows,
                                  std::size_t          width,
                                  std::size_t          pivot_cols) {
      std::vector<std::size_t> pivots;
      std::size_t              r = 0;
      for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p * width + c].num == 0) {
          ++p;
        }
        if (p == rows) {
          continue;
        }
        if (p != r) {
          for (std::size_t j = 0; j < width; ++j) {
            std::swap(m[p * width + j], m[r * width + j]);
          }
        }
        Scalar const inv = ring.inv(m[r * width + c]);
        for (std::size_t j = 0; j < width; ++j) {
          m[r * width + j] = ring.mul(m[r * width + j], inv);
        }
        for (std::size_t i = 0; i < rows; ++i) {
          if (i == r || m[i * width + c].num == 0) {
            continue;
          }
          Scalar const f = m[i * width + c];
          for (std::size_t j = 0; j < width; ++j) {
            if (m[r * width + j].num != 0) {
              m[i * width + j] = ring.sub(m[i * width + j],
                                          ring.mul(f, m[r * width + j]));
            }
          }
        }
        pivots.push_back(c);
        ++r;
      }
      return pivots;
    }
  }  // namespace

  std::size_t Matrix::rank() const {
    std::vector<Scalar> m = _entries;
    return rref(_ring, m, _rows, _cols, _cols).size();
  }

  Invertibility<Matrix> Matrix::invert() const {
    Invertibility<Matrix> result;
    if (_rows != _cols) {
      result.witness = ShapeWitness{_cols, _rows};
      return result;
    }
    std::size_t const n     = _cols;
    std::size_t const     width = n + _rows;
    // Eliminate on [A | I] so singular square inputs still expose a kernel.
    std::vector<Scalar> m(_rows * width, _ring.zero());
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m[i * width + j] = at(i, j);
      }
      m[i * width + n + i] = _ring.one();
    }
    auto const pivots = rref(_ring, m, _rows, width, n);

    if (pivots.size() < n) {
      // A free column exists: build the kernel vector from it.
      std::size_t free = 0;
      for (std::size_t k = 0, c = 0; c < n; ++c) {
        if (k < pivots.size() && pivots[k] == c) {
          ++k;
        } else {
          free = c;
          break;
        }
      }
      std::vector<Scalar> v(n, _ring.zero());
      v[free] = _ring.one();
      for (std::size_t k = 0; k < pivots.size(); ++k) {
        v[pivots[k]] = _ring.neg(m[k * width + free]);
      }
      result.witness = KernelVector{_ring, std::move(v)};
      return result;
    }
    Matrix inverse(_ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        inverse._entries[i * n + j] = m[i * width + n + j];
      }
    }
    result.invertible = true;
    result.inverse    = std::move(inverse);
    return result;
  }

  std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < _rows; ++i) {
      os << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < _cols; ++j) {
        os << (j == 0 ? "" : ", ") << _ring.to_string(at(i, j));
      }
      os << "]";
    }
    os << "]";
    return os.str();
  }

}  // namespace catcheck
