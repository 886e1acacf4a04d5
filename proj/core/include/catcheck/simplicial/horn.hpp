#pragma once

#include <cstddef>
#include <vector>

#include "catcheck/report.hpp"
#include "catcheck/simplicial/simplicial_set.hpp"

namespace catcheck {

  enum class HornKind { inner, all };

  struct HornCount {
    std::size_t n;
    std::size_t k;
    std::size_t horns    = 0;
    std::size_t filled   = 0;
    std::size_t uniquely = 0;
  };

  struct HornAudit {
    CheckReport            report;
    std::vector<HornCount> counts;
  };

  // Enumerates every horn Λⁿ_k with n ≤ dim (0 < k < n for inner, all k
  // otherwise) and looks for a filler among the n-simplices. One check per
  // (n, k); the first unfillable horn of each is the witness.
  [[nodiscard]] HornAudit horn_check(TruncatedSimplicialSet const& x,
                                     HornKind                      kind,
                                     std::size_t                   dim);

}  // namespace catcheck
