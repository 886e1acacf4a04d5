#include "catcheck/algebra/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "catcheck/error.hpp"
#include "catcheck/operators/set_operad.hpp"

namespace catcheck {

  namespace {

    bool associative(std::vector<std::vector<std::size_t>> const& t) {
      auto const n = t.size();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (t[t[a][b]][c] != t[a][t[b][c]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    std::optional<std::size_t> find_unit(std::vector<std::vector<std::size_t>> const& t) {
      auto const n = t.size();
      for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
          ok = t[e][a] == a && t[a][e] == a;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    std::vector<std::string> default_labels(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

  }  // namespace

  Monoid Monoid::from_table(std::vector<std::vector<std::size_t>> table,
                            std::vector<std::string>              labels) {
    auto const n = table.size();
    if (n == 0) {
      throw Error("a monoid needs at least one element");
    }
    for (auto const& row : table) {
      if (row.size() != n) {
        throw Error("monoid table is not square");
      }
      for (auto v : row) {
        if (v >= n) {
          throw Error("monoid table entry " + std::to_string(v) + " out of range");
        }
      }
    }
    if (!associative(table)) {
      throw Error("monoid table is not associative");
    }
    auto const e = find_unit(table);
    if (!e) {
      throw Error("monoid table has no two-sided unit");
    }
    if (labels.empty()) {
      labels = default_labels(n);
    } else if (labels.size() != n) {
      throw Error("monoid has " + std::to_string(n) + " elements but "
                  + std::to_string(labels.size()) + " labels");
    }
    return Monoid(std::move(table), std::move(labels), *e);
  }

  Monoid Monoid::cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string>              labels;
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
    }
    return from_table(std::move(t), std::move(labels));
  }

  Monoid Monoid::symmetric_group(std::size_t n) {
    auto const perms = all_permutations(n);
    auto const index = [&](Word const& w) {
      return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), w)
                                      - perms.begin());
    };
    std::vector<std::vector<std::size_t>> t(perms.size(),
                                            std::vector<std::size_t>(perms.size()));
    std::vector<std::string>              labels;
    // (a·b)(i) = a(b(i))
    for (std::size_t a = 0; a < perms.size(); ++a) {
      std::string label;
      for (auto v : perms[a]) {
        label += std::to_string(v + 1);
      }
      labels.push_back(label);
      for (std::size_t b = 0; b < perms.size(); ++b) {
        Word w(n);
        for (std::size_t i = 0; i < n; ++i) {
          w[i] = perms[a][perms[b][i]];
        }
        t[a][b] = index(w);
      }
    }
    return from_table(std::move(t), std::move(labels));
  }

  Monoid Monoid::idempotent() {
    return from_table({{0, 1}, {1, 1}}, {"e", "x"});
  }

  Monoid Monoid::truncated_naturals(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = std::min(a + b, n - 1);
      }
    }
    return from_table(std::move(t));
  }

  std::optional<std::size_t> Monoid::inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b) {
      if (_table[a][b] == _unit && _table[b][a] == _unit) {
        return b;
      }
    }
    return std::nullopt;
  }

  bool Monoid::is_group() const {
    return inversion().has_value();
  }

  std::optional<std::vector<std::size_t>> Monoid::inversion() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < order(); ++a) {
      auto b = inverse(a);
      if (!b) {
        return std::nullopt;
      }
      out.push_back(*b);
    }
    return out;
  }

  std::vector<std::vector<std::size_t>> Monoid::canonical_table() const {
    auto const                            n = order();
    std::vector<std::vector<std::size_t>> best;
    for (auto const& p : all_permutations(n)) {
      // p sends old labels to new ones.
      std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[p[a]][p[b]] = p[_table[a][b]];
        }
      }
      if (best.empty() || t < best) {
        best = std::move(t);
      }
    }
    return best;
  }

  nlohmann::json Monoid::to_json() const {
    return {{"elements", _labels}, {"table", _table}};
  }

  std::vector<Monoid> monoids_up_to_isomorphism(std::size_t n) {
    if (n == 0) {
      return {};
    }
    // Unit fixed at 0; the free cells are a·b with a, b ≥ 1.
    std::size_t const                     free = (n - 1) * (n - 1);
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      t[0][a] = a;
      t[a][0] = a;
    }
    std::vector<std::size_t>                        digit(free, 0);
    std::set<std::vector<std::vector<std::size_t>>> seen;
    std::vector<Monoid>                             out;
    while (true) {
      for (std::size_t k = 0; k < free; ++k) {
        t[1 + k / (n - 1)][1 + k % (n - 1)] = digit[k];
      }
      if (associative(t)) {
        auto m = Monoid::from_table(t);
        if (seen.insert(m.canonical_table()).second) {
          out.push_back(std::move(m));
        }
      }
      std::size_t c = free;
      while (true) {
        if (c == 0) {
          return out;
        }
        --c;
        if (++digit[c] < n) {
          break;
        }
        digit[c] = 0;
      }
    }
  }

}  // namespace catcheck
