#include "catcheck/interchange/nerve_algebra.hpp"

namespace catcheck {

  PointedSkeleton pointed_skeleton(std::size_t max_arity) {
    std::vector<std::string>           objects;
    std::vector<FiniteCategory::Arrow> arrows;
    std::vector<std::size_t>           identities(max_arity + 1);
    PointedSkeleton                    out{FiniteCategory::ordinal(0), {}, {}};
    for (std::size_t n = 0; n <= max_arity; ++n) {
      objects.push_back("[" + std::to_string(n) + "]+");
    }
    for (std::size_t m = 0; m <= max_arity; ++m) {
      for (std::size_t n = 0; n <= max_arity; ++n) {
        for (auto& a : enumerate_pointed_maps(m, n)) {
          if (m == n && a == PointedMap::identity(m)) {
            identities[m] = out.maps.size();
          }
          out.index.emplace(a, out.maps.size());
          arrows.push_back({m, n, a.to_string()});
          out.maps.push_back(std::move(a));
        }
      }
    }
    out.category = FiniteCategory::generate(
        std::move(objects), std::move(arrows), std::move(identities),
        [&](std::size_t g, std::size_t f) { return out.index.at(compose(out.maps[g], out.maps[f])); });
    return out;
  }

}  // namespace catcheck
