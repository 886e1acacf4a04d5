#include "catcheck/operators/pointed_map.hpp"

#include "catcheck/error.hpp"

namespace catcheck {

  PointedMap::PointedMap(std::size_t              source,
                         std::size_t              target,
                         std::vector<std::size_t> table)
      : _source(source), _target(target), _table(std::move(table)) {
    if (_table.size() != _source) {
      throw Error("pointed map table has " + std::to_string(_table.size())
                  + " entries for a source of arity "
                  + std::to_string(_source));
    }
    for (auto v : _table) {
      if (v > _target) {
        throw Error("pointed map value " + std::to_string(v)
                    + " outside target [" + std::to_string(_target) + "]_+");
      }
    }
  }

  PointedMap PointedMap::identity(std::size_t n) {
    std::vector<std::size_t> t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = i + 1;
    }
    return PointedMap(n, n, std::move(t));
  }

  PointedMap PointedMap::fold(std::size_t n) {
    return PointedMap(n, 1, std::vector<std::size_t>(n, 1));
  }

  PointedMap PointedMap::collapse_to(std::size_t n, std::size_t i) {
    if (i == 0 || i > n) {
      throw Error("ρ^" + std::to_string(i) + " undefined on ["
                  + std::to_string(n) + "]_+");
    }
    std::vector<std::size_t> t(n, basepoint);
    t[i - 1] = 1;
    return PointedMap(n, 1, std::move(t));
  }

  PointedMap PointedMap::from_empty(std::size_t n) {
    return PointedMap(0, n, {});
  }

  std::vector<std::size_t> PointedMap::preimage(std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < _source; ++i) {
      if (_table[i] == j) {
        out.push_back(i + 1);
      }
    }
    return out;
  }

  bool PointedMap::is_inert() const {
    std::vector<std::size_t> hits(_target + 1, 0);
    for (auto v : _table) {
      ++hits[v];
    }
    for (std::size_t j = 1; j <= _target; ++j) {
      if (hits[j] != 1) {
        return false;
      }
    }
    return true;
  }

  bool PointedMap::is_active() const {
    for (auto v : _table) {
      if (v == basepoint) {
        return false;
      }
    }
    return true;
  }

  std::string PointedMap::to_string() const {
    std::string out = "[" + std::to_string(_source) + "]→[" + std::to_string(_target) + "] (";
    for (std::size_t i = 0; i < _source; ++i) {
      out += (i == 0 ? "" : ", ") + std::to_string(i + 1) + "↦"
             + (_table[i] == basepoint ? std::string("*") : std::to_string(_table[i]));
    }
    return out + ")";
  }

  nlohmann::json PointedMap::to_json() const {
    nlohmann::json values = nlohmann::json::array();
    for (auto v : _table) {
      if (v == basepoint) {
        values.push_back("*");
      } else {
        values.push_back(v);
      }
    }
    return {{"source", _source}, {"target", _target}, {"table", values}};
  }

  PointedMap compose(PointedMap const& outer, PointedMap const& inner) {
    if (inner.target() != outer.source()) {
      throw CompositionError("pointed maps " + outer.to_string() + " ∘ "
                             + inner.to_string() + " are not composable");
    }
    std::vector<std::size_t> t(inner.source());
    for (std::size_t i = 1; i <= inner.source(); ++i) {
      t[i - 1] = outer(inner(i));
    }
    return PointedMap(inner.source(), outer.target(), std::move(t));
  }

  std::vector<PointedMap> enumerate_pointed_maps(std::size_t m, std::size_t n) {
    std::vector<PointedMap>  out;
    std::vector<std::size_t> digits(m, 0);
    while (true) {
      out.emplace_back(m, n, digits);
      std::size_t c = m;
      while (c > 0) {
        --c;
        if (++digits[c] <= n) {
          break;
        }
        digits[c] = 0;
        if (c == 0) {
          return out;
        }
      }
      if (m == 0) {
        return out;
      }
    }
  }

  std::uint64_t count_pointed_maps(std::size_t m, std::size_t n) {
    return enumerate_pointed_maps(m, n).size();
  }

  std::uint64_t pointed_map_count_formula(std::size_t m, std::size_t n) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < m; ++i) {
      out *= (n + 1);
    }
    return out;
  }

  InertActiveFactorization inert_active_factorize(PointedMap const& alpha) {
    std::size_t const        m = alpha.source();
    std::vector<std::size_t> inert_table(m, PointedMap::basepoint);
    std::vector<std::size_t> active_table;
    for (std::size_t i = 1; i <= m; ++i) {
      if (alpha(i) != PointedMap::basepoint) {
        active_table.push_back(alpha(i));
        inert_table[i - 1] = active_table.size();
      }
    }
    std::size_t const k = active_table.size();
    return {PointedMap(m, k, std::move(inert_table)),
            PointedMap(k, alpha.target(), std::move(active_table))};
  }

}  // namespace catcheck
