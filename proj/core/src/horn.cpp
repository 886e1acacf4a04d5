#include "catcheck/simplicial/horn.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace catcheck {

  HornAudit horn_check(TruncatedSimplicialSet const& x, HornKind kind, std::size_t dim) {
    HornAudit  out;
    auto const top = std::min(dim, x.dimension());
    for (std::size_t n = kind == HornKind::inner ? 2 : 1; n <= top; ++n) {
      std::size_t const k_lo = kind == HornKind::inner ? 1 : 0;
      std::size_t const k_hi = kind == HornKind::inner ? n - 1 : n;
      for (std::size_t k = k_lo; k <= k_hi; ++k) {
        std::map<std::vector<std::size_t>, std::size_t> fillers;
        for (std::size_t s = 0; s < x.size(n); ++s) {
          std::vector<std::size_t> key;
          for (std::size_t i = 0; i <= n; ++i) {
            if (i != k) {
              key.push_back(x.face(n, i, s));
            }
          }
          ++fillers[key];
        }

        HornCount                count{n, k};
        std::vector<std::size_t> faces;
        std::vector<std::size_t> slots;
        for (std::size_t i = 0; i <= n; ++i) {
          if (i != k) {
            slots.push_back(i);
          }
        }
        nlohmann::json witness;
        // y_{slots[t]} for t < faces.size() are chosen; d_i y_j = d_{j-1} y_i.
        std::function<void()> extend = [&] {
          if (faces.size() == slots.size()) {
            ++count.horns;
            auto it = fillers.find(faces);
            if (it != fillers.end()) {
              ++count.filled;
              count.uniquely += it->second == 1 ? 1 : 0;
            } else if (witness.is_null()) {
              nlohmann::json fs = nlohmann::json::array();
              for (std::size_t t = 0; t < slots.size(); ++t) {
                fs.push_back({{"index", slots[t]},
                              {"simplex", faces[t]},
                              {"label", x.label(n - 1, faces[t])}});
              }
              witness = {{"n", n}, {"k", k}, {"faces", fs}};
            }
            return;
          }
          std::size_t const j = slots[faces.size()];
          for (std::size_t y = 0; y < x.size(n - 1); ++y) {
            bool ok = true;
            for (std::size_t t = 0; t < faces.size() && ok; ++t) {
              std::size_t const i = slots[t];
              if (n >= 2) {
                ok = x.face(n - 1, i, y) == x.face(n - 1, j - 1, faces[t]);
              }
            }
            if (ok) {
              faces.push_back(y);
              extend();
              faces.pop_back();
            }
          }
        };
        extend();
        out.counts.push_back(count);
        std::string const name = "Λ^" + std::to_string(n) + "_" + std::to_string(k);
        std::string const detail = std::to_string(count.filled) + "/" + std::to_string(count.horns)
                                   + " filled, " + std::to_string(count.uniquely) + " uniquely";
        if (count.filled == count.horns) {
          out.report.pass(name, detail);
        } else {
          out.report.fail(name, detail, witness);
        }
      }
    }
    return out;
  }

}  // namespace catcheck
