#pragma once

#include <string>

#include "catcheck/algebra/algebra.hpp"
#include "catcheck/algebra/monoid.hpp"
#include "catcheck/finset_category.hpp"
#include "catcheck/matrix_category.hpp"

namespace catcheck {

  // The free-vector-space functor FinSet → Mat(F): the set n goes to F^n
  // and f to the 0/1 matrix with a 1 at (f(x), x). With the shared
  // flattening convention it is strict monoidal.
  [[nodiscard]] Matrix linearize(Function const& f, Ring const& ring);

  // The monoid as a bialgebra in finite sets: μ from the table, η the unit
  // element, δ the diagonal, ε the map to the point. A group also gets its
  // inversion as antipode.
  [[nodiscard]] Bialgebra<FinSetCategory> monoid_bialgebra(Monoid const& m,
                                                           std::string   name = {});

  // Applies linearize to every structure map.
  [[nodiscard]] Bialgebra<MatrixCategory> linearize(Bialgebra<FinSetCategory> const& b,
                                                    Ring const&                      ring);

  // F[M] over `ring`. With require_group set, a table that is not a group
  // is refused with PreconditionError.
  [[nodiscard]] Bialgebra<MatrixCategory> monoid_algebra(Monoid const&      m,
                                                         Ring const&        ring,
                                                         std::string        name          = {},
                                                         bool               require_group = false);

  // The permutation matrix of g ↦ g⁻¹. Throws PreconditionError on a
  // monoid that is not a group.
  [[nodiscard]] Matrix linearized_inversion(Monoid const& m, Ring const& ring);

  [[nodiscard]] bool is_commutative(Monoid const& m);

}  // namespace catcheck
