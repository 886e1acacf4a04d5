#include "catcheck/matrix_category.hpp"

#include <limits>
#include <string>

namespace catcheck {

  namespace {
    std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
      std::uint64_t out = 1;
      for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        out *= base;
      }
      return out;
    }

    std::string shape(Matrix const& m) {
      return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    }
  }  // namespace

  void MatrixCategory::require_instance(Matrix const& f) const {
    if (!(f.ring() == _ring)) {
      throw InstanceMismatch("morphism over " + f.ring().name()
                             + " used in the " + _ring.name()
                             + " matrix instance");
    }
  }

  Matrix MatrixCategory::compose(Matrix const& g, Matrix const& f) const {
    require_instance(f);
    require_instance(g);
    if (f.rows() != g.cols()) {
      throw CompositionError("g∘f undefined: f is " + shape(f) + " "
                             + f.to_string() + " with codomain "
                             + std::to_string(f.rows()) + ", g is "
                             + shape(g) + " " + g.to_string()
                             + " with domain " + std::to_string(g.cols()));
    }
    return g * f;
  }

  Matrix MatrixCategory::tensor(Matrix const& f, Matrix const& g) const {
    require_instance(f);
    require_instance(g);
    return f.kronecker(g);
  }

  Matrix MatrixCategory::braiding(Object a, Object b) const {
    std::vector<std::size_t> image(a * b);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t k = 0; k < b; ++k) {
        image[i * b + k] = k * a + i;
      }
    }
    return Matrix::from_function(_ring, image, a * b);
  }

  Matrix
  MatrixCategory::permute_factors(std::span<Object const>      objects,
                                  std::span<std::size_t const> perm) const {
    std::size_t const n     = objects.size();
    std::size_t       total = 1;
    for (auto d : objects) {
      total *= d;
    }
    // Strides of the output arrangement.
    std::vector<std::size_t> out_stride(n, 1);
    for (std::size_t t = n; t-- > 1;) {
      out_stride[t - 1] = out_stride[t] * objects[perm[t]];
    }
    // Position of each input factor in the output.
    std::vector<std::size_t> where(n);
    for (std::size_t t = 0; t < n; ++t) {
      where[perm[t]] = t;
    }
    std::vector<std::size_t> image(total);
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t out = 0;
      for (std::size_t i = 0; i < n; ++i) {
        out += digits[i] * out_stride[where[i]];
      }
      image[idx] = out;
      for (std::size_t i = n; i-- > 0;) {
        if (++digits[i] < objects[i]) {
          break;
        }
        digits[i] = 0;
      }
    }
    return Matrix::from_function(_ring, image, total);
  }

  Invertibility<Matrix> MatrixCategory::is_invertible(Matrix const& f) const {
    require_instance(f);
    return f.invert();
  }

  std::uint64_t MatrixCategory::hom_size(Object a, Object b) const {
    if (!_ring.is_prime_field()) {
      return a * b == 0 ? 1 : std::numeric_limits<std::uint64_t>::max();
    }
    return saturating_pow(_ring.characteristic(), a * b);
  }

  std::vector<Matrix> MatrixCategory::enumerate_hom(Object a, Object b) const {
    std::uint64_t const size = hom_size(a, b);
    if (size > kDefaultEnumerationLimit) {
      throw BoundError("hom(" + std::to_string(a) + ", " + std::to_string(b)
                       + ") over " + _ring.name()
                       + " is too large to enumerate");
    }
    std::vector<Matrix> out;
    out.reserve(size);
    std::size_t const              cells = a * b;
    std::vector<std::int64_t>      digits(cells, 0);
    auto const p = static_cast<std::int64_t>(_ring.characteristic());
    for (std::uint64_t n = 0; n < size; ++n) {
      Matrix m(_ring, b, a);
      for (std::size_t c = 0; c < cells; ++c) {
        if (digits[c] != 0) {
          m.set_int(c / a, c % a, digits[c]);
        }
      }
      out.push_back(std::move(m));
      for (std::size_t c = cells; c-- > 0;) {
        if (++digits[c] < p) {
          break;
        }
        digits[c] = 0;
      }
    }
    return out;
  }

  nlohmann::json MatrixCategory::to_json(Matrix const& f) const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < f.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < f.cols(); ++j) {
        Scalar const s = f.at(i, j);
        if (s.den == 1) {
          row.push_back(s.num);
        } else {
          row.push_back(f.ring().to_string(s));
        }
      }
      rows.push_back(std::move(row));
    }
    return {{"domain", f.cols()}, {"codomain", f.rows()}, {"matrix", rows}};
  }

}  // namespace catcheck
