#pragma once

#include <cstddef>
#include <cstdint>

#include "catcheck/report.hpp"

namespace catcheck {

  struct OperatorsAuditOptions {
    std::uint64_t prime = 2;
    // Arities of the composable triples in the associativity sweep.
    std::size_t associativity_arity = 3;
    // m, n for the Fin_* counts and the inert/active sweep.
    std::size_t count_bound = 4;
    std::size_t segal_bound = 3;
    // Arity bound of the Comm^⊗ ≅ Fin_* comparison.
    std::size_t skeleton_bound = 4;
    std::uint64_t seed = 0x5eed;
  };

  // Composition associativity and unit laws of C^⊗ over every composable
  // triple of pointed maps with arities ≤ associativity_arity, on the
  // two-object instance {F_p^1, F_p^2}: each triple is realized with object
  // tuples and components drawn from a generator seeded with `seed`.
  [[nodiscard]] CheckReport operator_associativity(OperatorsAuditOptions const& options);

  // |Hom([m]_+, [n]_+)| = (n+1)^m and α = active∘inert for m, n ≤ bound.
  [[nodiscard]] CheckReport pointed_map_audit(std::size_t bound);

  // Segal comparison for n ≤ bound on F_p (dimensions 1, 2) and on finite
  // sets (sizes 1, 2).
  [[nodiscard]] CheckReport segal_audit(std::uint64_t prime, std::size_t bound);

  // Cocartesian lifts on F_p: the enumeration criterion for every α out of
  // [m]_+ and β out of [n]_+ with m, n, p ≤ 2 and tuples over {F_p^1, F_p^2}.
  [[nodiscard]] CheckReport cocartesian_audit(std::uint64_t prime);

  // Operad laws of Comm and Assoc, Comm^⊗ ≅ Fin_* up to skeleton_bound, and
  // the Assoc hom-set sizes out of [2]_+.
  [[nodiscard]] CheckReport operad_audit(std::size_t skeleton_bound);

  // All of the above.
  [[nodiscard]] CheckReport operators_audit(OperatorsAuditOptions const& options);

}  // namespace catcheck
