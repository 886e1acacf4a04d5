#include "catcheck/algebra/linearize.hpp"

#include "catcheck/error.hpp"

namespace catcheck {

  Matrix linearize(Function const& f, Ring const& ring) {
    return Matrix::from_function(ring, f.table, f.codomain);
  }

  bool is_commutative(Monoid const& m) {
    for (std::size_t a = 0; a < m.order(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        if (m(a, b) != m(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  Bialgebra<FinSetCategory> monoid_bialgebra(Monoid const& m, std::string name) {
    FinSetCategory const     c;
    auto const               n = m.order();
    std::vector<std::size_t> mu(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        mu[a * n + b] = m(a, b);
      }
    }
    Bialgebra<FinSetCategory> out{std::move(name),
                                  n,
                                  Function::from_table(n, std::move(mu)),
                                  c.point(n, m.unit()),
                                  c.diagonal(n),
                                  c.terminal(n),
                                  std::nullopt,
                                  is_commutative(m)};
    if (auto inv = m.inversion()) {
      out.antipode = Function::from_table(n, std::move(*inv));
    }
    return out;
  }

  Bialgebra<MatrixCategory> linearize(Bialgebra<FinSetCategory> const& b, Ring const& ring) {
    Bialgebra<MatrixCategory> out{b.name,
                                  b.carrier,
                                  linearize(b.mu, ring),
                                  linearize(b.eta, ring),
                                  linearize(b.delta, ring),
                                  linearize(b.epsilon, ring),
                                  std::nullopt,
                                  b.commutative};
    if (b.antipode) {
      out.antipode = linearize(*b.antipode, ring);
    }
    return out;
  }

  Bialgebra<MatrixCategory> monoid_algebra(Monoid const&      m,
                                           Ring const&        ring,
                                           std::string        name,
                                           bool               require_group) {
    if (require_group && !m.is_group()) {
      throw PreconditionError("monoid table is not a group: some element has no inverse");
    }
    return linearize(monoid_bialgebra(m, std::move(name)), ring);
  }

  Matrix linearized_inversion(Monoid const& m, Ring const& ring) {
    auto inv = m.inversion();
    if (!inv) {
      throw PreconditionError("monoid table is not a group: some element has no inverse");
    }
    return Matrix::from_function(ring, *inv, m.order());
  }

}  // namespace catcheck
