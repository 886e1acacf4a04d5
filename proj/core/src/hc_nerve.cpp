#include "catcheck/simplicial/hc_nerve.hpp"

#include <functional>

#include "catcheck/error.hpp"

namespace catcheck {

  namespace {

    constexpr std::size_t kMaxHcDimension = 3;

    // Chains of 𝔠[Δⁿ] grouped by level and pair, with reverse lookup.
    struct CubeIndex {
      std::size_t                                             n;
      std::vector<std::vector<std::vector<CubeChain>>>        chains;  // [k][pair]
      std::vector<std::vector<std::map<CubeChain, std::size_t>>> index;

      CubeIndex(std::size_t n_, std::size_t dim) : n(n_) {
        CoherentCube const cube(n);
        std::size_t const  pairs = n * (n + 1) / 2;
        chains.assign(dim + 1, std::vector<std::vector<CubeChain>>(pairs));
        index.assign(dim + 1, std::vector<std::map<CubeChain, std::size_t>>(pairs));
        for (std::size_t k = 0; k <= dim; ++k) {
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
              auto const p = hc_pair_index(n, i, j);
              chains[k][p] = cube.chains(i, j, k);
              for (std::size_t c = 0; c < chains[k][p].size(); ++c) {
                index[k][p].emplace(chains[k][p][c], c);
              }
            }
          }
        }
      }

      [[nodiscard]] std::size_t at(std::size_t k, CubeChain const& c) const {
        auto const p = hc_pair_index(n, CoherentCube::source(c), CoherentCube::target(c));
        return index[k][p].at(c);
      }
    };

    std::size_t top_dimension(SimplicialCategory const& c, std::size_t dim) {
      return std::min({dim, c.dimension(), kMaxHcDimension});
    }

    HcSimplex restrict_with(SimplicialCategory const&       c,
                            CubeIndex const&                big,
                            CubeIndex const&                small,
                            HcSimplex const&                f,
                            std::vector<std::size_t> const& theta) {
      auto const m = theta.size() - 1;
      HcSimplex  out;
      for (auto v : theta) {
        out.objects.push_back(f.objects.at(v));
      }
      auto const D = c.dimension();
      out.values.assign(D + 1, std::vector<std::vector<std::size_t>>(m * (m + 1) / 2));
      for (std::size_t k = 0; k <= D; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = i + 1; j <= m; ++j) {
            auto const  p      = hc_pair_index(m, i, j);
            auto const& source = small.chains[k][p];
            auto&       target = out.values[k][p];
            for (auto const& ch : source) {
              if (theta[i] == theta[j]) {
                target.push_back(c.level(k).identity(f.objects[theta[i]]));
              } else {
                auto const image = CoherentCube::apply(theta, ch);
                auto const q     = hc_pair_index(big.n, theta[i], theta[j]);
                target.push_back(f.values[k][q][big.at(k, image)]);
              }
            }
          }
        }
      }
      return out;
    }

    std::vector<HcSimplex> enumerate(SimplicialCategory const& c, CubeIndex const& cube) {
      auto const n = cube.n;
      auto const D = c.dimension();
      struct Slot {
        std::size_t k, i, j, pair, chain;
      };
      std::vector<Slot> slots;
      for (std::size_t k = 0; k <= D; ++k) {
        for (std::size_t span = 1; span <= n; ++span) {
          for (std::size_t i = 0; i + span <= n; ++i) {
            auto const p = hc_pair_index(n, i, i + span);
            for (std::size_t ch = 0; ch < cube.chains[k][p].size(); ++ch) {
              slots.push_back({k, i, i + span, p, ch});
            }
          }
        }
      }

      std::vector<HcSimplex>   out;
      std::vector<std::size_t> objects(n + 1, 0);
      HcSimplex                f;

      auto forced = [&](Slot const& s) -> std::optional<std::size_t> {
        auto const& ch = cube.chains[s.k][s.pair][s.chain];
        if (auto l = CoherentCube::split_point(ch)) {
          auto const [left, right] = CoherentCube::split(ch, *l);
          auto const a = f.values[s.k][hc_pair_index(n, s.i, *l)][cube.at(s.k, left)];
          auto const b = f.values[s.k][hc_pair_index(n, *l, s.j)][cube.at(s.k, right)];
          return c.level(s.k).compose(b, a);
        }
        for (std::size_t t = 0; s.k > 0 && t < s.k; ++t) {
          if (ch[t] == ch[t + 1]) {
            auto const below = CoherentCube::face(ch, t);
            return c.degeneracy(s.k - 1, t, f.values[s.k - 1][s.pair][cube.at(s.k - 1, below)]);
          }
        }
        return std::nullopt;
      };

      auto faces_agree = [&](Slot const& s, std::size_t v) {
        auto const& lvl = c.level(s.k);
        if (lvl.domain(v) != objects[s.i] || lvl.codomain(v) != objects[s.j]) {
          return false;
        }
        auto const& ch = cube.chains[s.k][s.pair][s.chain];
        for (std::size_t t = 0; s.k > 0 && t <= s.k; ++t) {
          auto const below = CoherentCube::face(ch, t);
          if (c.face(s.k, t, v) != f.values[s.k - 1][s.pair][cube.at(s.k - 1, below)]) {
            return false;
          }
        }
        return true;
      };

      auto fully_valid = [&] {
        for (std::size_t k = 0; k <= D; ++k) {
          for (std::size_t p = 0; p < cube.chains[k].size(); ++p) {
            for (std::size_t x = 0; x < cube.chains[k][p].size(); ++x) {
              auto const& ch = cube.chains[k][p][x];
              auto const  v  = f.values[k][p][x];
              auto const  i = CoherentCube::source(ch), j = CoherentCube::target(ch);
              for (std::size_t t = 0; k < D && t <= k; ++t) {
                auto const up = CoherentCube::degeneracy(ch, t);
                if (f.values[k + 1][p][cube.at(k + 1, up)] != c.degeneracy(k, t, v)) {
                  return false;
                }
              }
              for (std::size_t l = i + 1; l < j; ++l) {
                if (!(ch.front() & (1u << l))) {
                  continue;
                }
                auto const [left, right] = CoherentCube::split(ch, l);
                auto const a = f.values[k][hc_pair_index(n, i, l)][cube.at(k, left)];
                auto const b = f.values[k][hc_pair_index(n, l, j)][cube.at(k, right)];
                if (c.level(k).compose(b, a) != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      };

      std::function<void(std::size_t)> assign = [&](std::size_t at) {
        if (at == slots.size()) {
          if (fully_valid()) {
            f.objects = objects;
            out.push_back(f);
          }
          return;
        }
        auto const& s = slots[at];
        if (auto v = forced(s)) {
          if (faces_agree(s, *v)) {
            f.values[s.k][s.pair][s.chain] = *v;
            assign(at + 1);
          }
          return;
        }
        for (auto v : c.level(s.k).hom(objects[s.i], objects[s.j])) {
          if (faces_agree(s, v)) {
            f.values[s.k][s.pair][s.chain] = v;
            assign(at + 1);
          }
        }
      };

      f.values.assign(D + 1, std::vector<std::vector<std::size_t>>(cube.chains.empty() ? 0 : cube.chains[0].size()));
      for (std::size_t k = 0; k <= D; ++k) {
        for (std::size_t p = 0; p < f.values[k].size(); ++p) {
          f.values[k][p].assign(cube.chains[k][p].size(), 0);
        }
      }
      std::size_t const N = c.object_count();
      std::function<void(std::size_t)> choose = [&](std::size_t v) {
        if (v > n) {
          assign(0);
          return;
        }
        for (std::size_t x = 0; x < N; ++x) {
          objects[v] = x;
          choose(v + 1);
        }
      };
      choose(0);
      return out;
    }

    std::string simplex_label(SimplicialCategory const& c, HcSimplex const& f) {
      std::string out;
      for (std::size_t i = 0; i < f.objects.size(); ++i) {
        out += (i ? "," : "") + c.level(0).object_label(f.objects[i]);
      }
      auto const n = f.objects.size() - 1;
      for (std::size_t i = 0; i < n; ++i) {
        out += (i ? ";" : " | ") + c.level(0).arrow(f.values[0][hc_pair_index(n, i, i + 1)][0]).label;
      }
      return out;
    }

  }  // namespace

  std::size_t hc_pair_index(std::size_t n, std::size_t i, std::size_t j) {
    // Pairs (i, j), i < j ≤ n, in lexicographic order.
    return i * n - i * (i - 1) / 2 + (j - i - 1);
  }

  std::vector<HcSimplex> hc_nerve_simplices(SimplicialCategory const& c, std::size_t n) {
    if (n > kMaxHcDimension || n > c.dimension()) {
      throw BoundError("hc-nerve simplices of dimension " + std::to_string(n)
                       + " need n ≤ min(3, " + std::to_string(c.dimension()) + ")");
    }
    return enumerate(c, CubeIndex(n, c.dimension()));
  }

  HcSimplex restrict_along(SimplicialCategory const&       c,
                           HcSimplex const&                f,
                           std::vector<std::size_t> const& theta) {
    CubeIndex const big(f.objects.size() - 1, c.dimension());
    CubeIndex const small(theta.size() - 1, c.dimension());
    return restrict_with(c, big, small, f, theta);
  }

  HcNerve hc_nerve(SimplicialCategory const& c, std::size_t dim) {
    auto const             top = top_dimension(c, dim);
    std::vector<CubeIndex> cubes;
    HcNerve                out{TruncatedSimplicialSet({0}, {}, {}), {}, {}};
    std::vector<std::size_t>              sizes;
    std::vector<std::vector<std::string>> labels(top + 1);
    for (std::size_t m = 0; m <= top; ++m) {
      cubes.emplace_back(m, c.dimension());
      out.simplices.push_back(enumerate(c, cubes.back()));
      std::map<HcSimplex, std::size_t> index;
      for (std::size_t s = 0; s < out.simplices[m].size(); ++s) {
        index.emplace(out.simplices[m][s], s);
        labels[m].push_back(simplex_label(c, out.simplices[m][s]));
      }
      out.index.push_back(std::move(index));
      sizes.push_back(out.simplices[m].size());
    }
    TruncatedSimplicialSet::Tables faces(top + 1), degen(top + 1);
    for (std::size_t m = 0; m <= top; ++m) {
      for (std::size_t t = 0; m > 0 && t <= m; ++t) {
        std::vector<std::size_t> theta;
        for (std::size_t v = 0; v <= m; ++v) {
          if (v != t) {
            theta.push_back(v);
          }
        }
        std::vector<std::size_t> table;
        for (auto const& f : out.simplices[m]) {
          table.push_back(out.index[m - 1].at(restrict_with(c, cubes[m], cubes[m - 1], f, theta)));
        }
        faces[m].push_back(std::move(table));
      }
      for (std::size_t t = 0; m < top && t <= m; ++t) {
        std::vector<std::size_t> theta;
        for (std::size_t v = 0; v <= m + 1; ++v) {
          theta.push_back(v <= t ? v : v - 1);
        }
        std::vector<std::size_t> table;
        for (auto const& f : out.simplices[m]) {
          table.push_back(out.index[m + 1].at(restrict_with(c, cubes[m], cubes[m + 1], f, theta)));
        }
        degen[m].push_back(std::move(table));
      }
    }
    out.set = TruncatedSimplicialSet(std::move(sizes), std::move(faces), std::move(degen),
                                     std::move(labels));
    return out;
  }

  SimplicialMap discrete_identification(HcNerve const& hc, Nerve const& n) {
    SimplicialMap out;
    auto const    top = std::min(hc.simplices.size(), n.chains.size());
    for (std::size_t m = 0; m < top; ++m) {
      std::vector<std::size_t> level;
      for (auto const& f : hc.simplices[m]) {
        std::vector<std::size_t> chain;
        if (m == 0) {
          chain = {f.objects[0]};
        } else {
          for (std::size_t i = 0; i < m; ++i) {
            chain.push_back(f.values[0][hc_pair_index(m, i, i + 1)][0]);
          }
        }
        level.push_back(n.index[m].at(chain));
      }
      out.levels.push_back(std::move(level));
    }
    return out;
  }

  SimplicialMap adjunction_unit(std::size_t               n,
                                SimplicialCategory const& c,
                                HcNerve const&            source,
                                HcNerve const&            target) {
    if (n > 2) {
      throw BoundError("adjunction unit is implemented for n ≤ 2");
    }
    CoherentCube const cube(n);
    auto const         D   = c.dimension();
    auto const         top = std::min(source.simplices.size(), target.simplices.size()) - 1;
    std::vector<std::map<CubeChain, std::size_t>> cube_index;
    for (std::size_t k = 0; k <= D; ++k) {
      cube_index.push_back(cube.level_index(k));
    }
    auto const    N = c.object_count();
    SimplicialMap out;
    for (std::size_t m = 0; m <= top; ++m) {
      CubeIndex const          chains(m, D);
      auto const               thetas = monotone_maps(m, n);
      std::vector<std::size_t> level;
      for (auto const& theta : thetas) {
        for (auto const& f : source.simplices[m]) {
          HcSimplex g;
          for (std::size_t i = 0; i <= m; ++i) {
            g.objects.push_back(theta[i] * N + f.objects[i]);
          }
          g.values = f.values;
          for (std::size_t k = 0; k <= D; ++k) {
            auto const mk = c.level(k).morphism_count();
            for (std::size_t p = 0; p < g.values[k].size(); ++p) {
              for (std::size_t x = 0; x < g.values[k][p].size(); ++x) {
                auto const image = CoherentCube::apply(theta, chains.chains[k][p][x]);
                g.values[k][p][x] = cube_index[k].at(image) * mk + f.values[k][p][x];
              }
            }
          }
          auto it = target.index[m].find(g);
          if (it == target.index[m].end()) {
            throw Error("adjunction unit: image is not a simplex of the target nerve");
          }
          level.push_back(it->second);
        }
      }
      out.levels.push_back(std::move(level));
    }
    return out;
  }

  SimplicialMap hc_nerve_map(SimplicialFunctor const& f,
                             HcNerve const&           source,
                             HcNerve const&           target) {
    SimplicialMap out;
    auto const    top = std::min(source.simplices.size(), target.simplices.size());
    for (std::size_t m = 0; m < top; ++m) {
      std::vector<std::size_t> level;
      for (auto const& s : source.simplices[m]) {
        HcSimplex g = s;
        for (auto& x : g.objects) {
          x = f.objects.at(x);
        }
        for (std::size_t k = 0; k < g.values.size(); ++k) {
          for (auto& row : g.values[k]) {
            for (auto& v : row) {
              v = f.levels.at(k).at(v);
            }
          }
        }
        auto it = target.index[m].find(g);
        if (it == target.index[m].end()) {
          throw Error("image of a simplex is not a simplex of the target nerve");
        }
        level.push_back(it->second);
      }
      out.levels.push_back(std::move(level));
    }
    return out;
  }

}  // namespace catcheck
