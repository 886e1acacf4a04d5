#include "catcheck/operators/set_operad.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "catcheck/error.hpp"

namespace catcheck {

  namespace {

    using Tuple = std::vector<SetOperad::Entry>;

    nlohmann::json entry_json(SetOperad const& o, SetOperad::Entry e) {
      return o.word(e.arity, e.element);
    }

    nlohmann::json tuple_json(SetOperad const& o, Tuple const& t) {
      nlohmann::json out = nlohmann::json::array();
      for (auto e : t) {
        out.push_back(entry_json(o, e));
      }
      return out;
    }

    std::size_t total_arity(Tuple const& t) {
      std::size_t s = 0;
      for (auto e : t) {
        s += e.arity;
      }
      return s;
    }

  }  // namespace

  std::vector<Word> all_permutations(std::size_t n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 0);
    std::vector<Word> out;
    do {
      out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
  }

  SetOperad SetOperad::comm(std::size_t max_arity) {
    return SetOperad("Comm", max_arity, true);
  }

  SetOperad SetOperad::assoc(std::size_t max_arity) {
    return SetOperad("Assoc", max_arity, false);
  }

  Word SetOperad::normalize(Word w) const {
    if (_commutative) {
      std::sort(w.begin(), w.end());
    }
    return w;
  }

  SetOperad::SetOperad(std::string name, std::size_t max_arity, bool commutative)
      : _name(std::move(name)), _max_arity(max_arity), _commutative(commutative) {
    for (std::size_t n = 0; n <= _max_arity; ++n) {
      _permutations.push_back(all_permutations(n));
      std::vector<Word> level;
      for (auto const& w : _permutations.back()) {
        auto nw = normalize(w);
        if (!_index.contains(nw)) {
          _index.emplace(nw, level.size());
          level.push_back(std::move(nw));
        }
      }
      _elements.push_back(std::move(level));
    }

    for (std::size_t n = 0; n <= _max_arity; ++n) {
      std::vector<std::vector<std::size_t>> table;
      for (auto const& w : _elements[n]) {
        std::vector<std::size_t> row;
        for (auto const& perm : _permutations[n]) {
          Word image(n);
          for (std::size_t t = 0; t < n; ++t) {
            image[t] = perm[w[t]];
          }
          row.push_back(_index.at(normalize(image)));
        }
        table.push_back(std::move(row));
      }
      _action.push_back(std::move(table));
    }

    // Every γ(θ; φ_1..φ_n) with n and Σ arity(φ_i) at most N.
    std::function<void(std::size_t, std::size_t, Tuple&)> fill;
    for (std::size_t n = 0; n <= _max_arity; ++n) {
      for (std::size_t theta = 0; theta < _elements[n].size(); ++theta) {
        Tuple inner;
        fill = [&](std::size_t remaining, std::size_t budget, Tuple& acc) {
          if (remaining == 0) {
            std::vector<std::size_t> key{n, theta};
            for (auto e : acc) {
              key.push_back(e.arity);
              key.push_back(e.element);
            }
            _composition.emplace(std::move(key), compose_rule({n, theta}, acc).element);
            return;
          }
          for (std::size_t k = 0; k <= budget; ++k) {
            for (std::size_t e = 0; e < _elements[k].size(); ++e) {
              acc.push_back({k, e});
              fill(remaining - 1, budget - k, acc);
              acc.pop_back();
            }
          }
        };
        fill(n, _max_arity, inner);
      }
    }
  }

  void SetOperad::require_arity(std::size_t n) const {
    if (n > _max_arity) {
      throw BoundError(_name + " is stored up to arity " + std::to_string(_max_arity)
                       + ", arity " + std::to_string(n) + " requested");
    }
  }

  std::size_t SetOperad::size(std::size_t n) const {
    require_arity(n);
    return _elements[n].size();
  }

  Word const& SetOperad::word(std::size_t n, std::size_t element) const {
    require_arity(n);
    return _elements[n].at(element);
  }

  std::size_t SetOperad::index(Word const& w) const {
    require_arity(w.size());
    auto it = _index.find(normalize(w));
    if (it == _index.end()) {
      throw Error("not a word on distinct letters");
    }
    return it->second;
  }

  SetOperad::Entry SetOperad::compose_rule(Entry outer, Tuple const& inner) const {
    auto const&              w = _elements[outer.arity][outer.element];
    std::vector<std::size_t> offset(inner.size() + 1, 0);
    for (std::size_t i = 0; i < inner.size(); ++i) {
      offset[i + 1] = offset[i] + inner[i].arity;
    }
    Word out;
    for (auto letter : w) {
      for (auto v : _elements[inner[letter].arity][inner[letter].element]) {
        out.push_back(offset[letter] + v);
      }
    }
    return {out.size(), _index.at(normalize(out))};
  }

  SetOperad::Entry SetOperad::compose(Entry outer, Tuple const& inner) const {
    require_arity(outer.arity);
    if (inner.size() != outer.arity) {
      throw ShapeError("operad composition: " + std::to_string(inner.size())
                       + " inputs for an operation of arity "
                       + std::to_string(outer.arity));
    }
    auto const total = total_arity(inner);
    require_arity(total);
    std::vector<std::size_t> key{outer.arity, outer.element};
    for (auto e : inner) {
      key.push_back(e.arity);
      key.push_back(e.element);
    }
    return {total, _composition.at(key)};
  }

  std::size_t SetOperad::relabel(std::size_t                     n,
                                 std::size_t                     element,
                                 std::vector<std::size_t> const& perm) const {
    require_arity(n);
    auto const& perms = _permutations[n];
    auto        it    = std::lower_bound(perms.begin(), perms.end(), perm);
    if (it == perms.end() || *it != perm) {
      throw ShapeError("relabelling is not a permutation of " + std::to_string(n)
                       + " letters");
    }
    return _action[n].at(element)[static_cast<std::size_t>(it - perms.begin())];
  }

  CheckReport SetOperad::check_laws() const {
    CheckReport report;
    auto const  N = _max_arity;

    // Tuples of the given length whose arities sum to at most `budget`.
    auto for_each_tuple = [&](std::size_t length, std::size_t budget,
                              std::function<void(Tuple const&)> const& fn) {
      Tuple                                           acc;
      std::function<void(std::size_t, std::size_t)>   rec;
      rec = [&](std::size_t remaining, std::size_t left) {
        if (remaining == 0) {
          fn(acc);
          return;
        }
        for (std::size_t k = 0; k <= left; ++k) {
          for (std::size_t e = 0; e < _elements[k].size(); ++e) {
            acc.push_back({k, e});
            rec(remaining - 1, left - k);
            acc.pop_back();
          }
        }
      };
      rec(length, budget);
    };

    bool        unit_ok = true;
    std::size_t units   = 0;
    for (std::size_t n = 0; n <= N && unit_ok; ++n) {
      for (std::size_t theta = 0; theta < _elements[n].size(); ++theta) {
        Tuple ones(n, Entry{1, unit()});
        auto  right = compose({n, theta}, ones);
        auto  left  = compose({1, unit()}, {Entry{n, theta}});
        ++units;
        if (right.element != theta || left.element != theta) {
          unit_ok = false;
          report.fail("operad unit", "γ(θ; 1..1) or γ(1; θ) differs from θ",
                      {{"theta", _elements[n][theta]}});
          break;
        }
      }
    }
    if (unit_ok) {
      report.pass("operad unit", std::to_string(units) + " operations");
    }

    bool        assoc_ok = true;
    std::size_t assoc_n  = 0;
    for (std::size_t n = 0; n <= N && assoc_ok; ++n) {
      for (std::size_t theta = 0; theta < _elements[n].size() && assoc_ok; ++theta) {
        for_each_tuple(n, N, [&](Tuple const& phi) {
          if (!assoc_ok) {
            return;
          }
          auto const inner = compose({n, theta}, phi);
          for_each_tuple(inner.arity, N, [&](Tuple const& psi) {
            if (!assoc_ok) {
              return;
            }
            auto const lhs = compose(inner, psi);
            Tuple      grouped;
            std::size_t at = 0;
            for (auto f : phi) {
              Tuple block(psi.begin() + static_cast<std::ptrdiff_t>(at),
                          psi.begin() + static_cast<std::ptrdiff_t>(at + f.arity));
              at += f.arity;
              grouped.push_back(compose(f, block));
            }
            auto const rhs = compose({n, theta}, grouped);
            ++assoc_n;
            if (lhs.element != rhs.element) {
              assoc_ok = false;
              report.fail("operad associativity",
                          "γ(γ(θ; φ); ψ) != γ(θ; γ(φ_i; ψ_i))",
                          {{"theta", _elements[n][theta]},
                           {"phi", tuple_json(*this, phi)},
                           {"psi", tuple_json(*this, psi)}});
            }
          });
        });
      }
    }
    if (assoc_ok) {
      report.pass("operad associativity", std::to_string(assoc_n) + " cases");
    }

    bool        eq_ok = true;
    std::size_t eq_n  = 0;
    for (std::size_t n = 0; n <= N && eq_ok; ++n) {
      for (std::size_t theta = 0; theta < _elements[n].size() && eq_ok; ++theta) {
        for_each_tuple(n, N, [&](Tuple const& phi) {
          if (!eq_ok) {
            return;
          }
          std::size_t const K = total_arity(phi);
          std::vector<std::size_t> offset(n + 1, 0);
          for (std::size_t i = 0; i < n; ++i) {
            offset[i + 1] = offset[i] + phi[i].arity;
          }
          // Outer relabelling by σ against the block permutation σ⟨k⟩.
          for (auto const& sigma : _permutations[n]) {
            auto const lhs = compose({n, relabel(n, theta, sigma)}, phi);
            Tuple      moved(n);
            for (std::size_t s = 0; s < n; ++s) {
              moved[s] = phi[sigma[s]];
            }
            std::vector<std::size_t> moved_offset(n + 1, 0);
            for (std::size_t s = 0; s < n; ++s) {
              moved_offset[s + 1] = moved_offset[s] + moved[s].arity;
            }
            std::vector<std::size_t> block_perm(K);
            for (std::size_t s = 0; s < n; ++s) {
              for (std::size_t a = 0; a < moved[s].arity; ++a) {
                block_perm[moved_offset[s] + a] = offset[sigma[s]] + a;
              }
            }
            auto const rhs = compose({n, theta}, moved);
            ++eq_n;
            if (lhs.element != relabel(K, rhs.element, block_perm)) {
              eq_ok = false;
              report.fail("operad equivariance", "outer relabelling",
                          {{"theta", _elements[n][theta]},
                           {"sigma", sigma},
                           {"phi", tuple_json(*this, phi)}});
              return;
            }
          }
          // Inner relabelling by τ in slot i against the block sum.
          for (std::size_t i = 0; i < n; ++i) {
            for (auto const& tau : _permutations[phi[i].arity]) {
              Tuple changed      = phi;
              changed[i].element = relabel(phi[i].arity, phi[i].element, tau);
              auto const lhs     = compose({n, theta}, changed);
              std::vector<std::size_t> sum(K);
              std::iota(sum.begin(), sum.end(), 0);
              for (std::size_t a = 0; a < phi[i].arity; ++a) {
                sum[offset[i] + a] = offset[i] + tau[a];
              }
              auto const rhs = compose({n, theta}, phi);
              ++eq_n;
              if (lhs.element != relabel(K, rhs.element, sum)) {
                eq_ok = false;
                report.fail("operad equivariance", "inner relabelling",
                            {{"theta", _elements[n][theta]},
                             {"slot", i},
                             {"tau", tau},
                             {"phi", tuple_json(*this, phi)}});
                return;
              }
            }
          }
        });
      }
    }
    if (eq_ok) {
      report.pass("operad equivariance", std::to_string(eq_n) + " cases");
    }
    return report;
  }

}  // namespace catcheck
