#include "catcheck/simplicial/coherent_cube.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "catcheck/error.hpp"
#include "catcheck/simplicial/nerve.hpp"

namespace catcheck {

  CoherentCube::CoherentCube(std::size_t n) : _n(n) {
    if (n > max_n) {
      throw BoundError("coherent cube of dimension " + std::to_string(n) + " above the bound "
                       + std::to_string(max_n));
    }
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        std::vector<std::uint32_t> level;
        std::uint32_t const        ends = (1u << i) | (1u << j);
        std::uint32_t const        span = j > i + 1 ? j - i - 1 : 0;
        for (std::uint32_t inner = 0; inner < (1u << span); ++inner) {
          level.push_back(ends | (inner << (i + 1)));
        }
        std::sort(level.begin(), level.end(), [](std::uint32_t a, std::uint32_t b) {
          auto const pa = std::popcount(a), pb = std::popcount(b);
          return pa != pb ? pa < pb : a < b;
        });
        _subsets.emplace(std::pair{i, j}, std::move(level));
      }
    }
  }

  std::vector<std::uint32_t> const& CoherentCube::subsets(std::size_t i, std::size_t j) const {
    auto it = _subsets.find({i, j});
    if (it == _subsets.end()) {
      throw ShapeError("no subsets P_{" + std::to_string(i) + "," + std::to_string(j)
                       + "} in 𝔠[Δ^" + std::to_string(_n) + "]");
    }
    return it->second;
  }

  std::vector<CubeChain> CoherentCube::chains(std::size_t i, std::size_t j, std::size_t k) const {
    auto const&            p = subsets(i, j);
    std::vector<CubeChain> out;
    CubeChain              acc;
    std::function<void()>  rec = [&] {
      if (acc.size() == k + 1) {
        out.push_back(acc);
        return;
      }
      for (auto s : p) {
        if (acc.empty() || (acc.back() & s) == acc.back()) {
          acc.push_back(s);
          rec();
          acc.pop_back();
        }
      }
    };
    rec();
    return out;
  }

  std::map<CubeChain, std::size_t> CoherentCube::level_index(std::size_t k) const {
    std::map<CubeChain, std::size_t> out;
    for (std::size_t i = 0; i <= _n; ++i) {
      for (std::size_t j = i; j <= _n; ++j) {
        for (auto& c : chains(i, j, k)) {
          out.emplace(std::move(c), out.size());
        }
      }
    }
    return out;
  }

  CubeChain CoherentCube::identity(std::size_t i, std::size_t k) {
    return CubeChain(k + 1, 1u << i);
  }

  CubeChain CoherentCube::compose(CubeChain const& g, CubeChain const& f) {
    if (g.size() != f.size() || source(g) != target(f)) {
      throw CompositionError("cube chains " + render(g) + " ∘ " + render(f)
                             + " are not composable");
    }
    CubeChain out(f.size());
    for (std::size_t t = 0; t < f.size(); ++t) {
      out[t] = f[t] | g[t];
    }
    return out;
  }

  CubeChain CoherentCube::face(CubeChain const& c, std::size_t t) {
    CubeChain out = c;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(t));
    return out;
  }

  CubeChain CoherentCube::degeneracy(CubeChain const& c, std::size_t t) {
    CubeChain out = c;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(t), c[t]);
    return out;
  }

  std::size_t CoherentCube::source(CubeChain const& c) {
    return static_cast<std::size_t>(std::countr_zero(c.front()));
  }

  std::size_t CoherentCube::target(CubeChain const& c) {
    return static_cast<std::size_t>(31 - std::countl_zero(c.front()));
  }

  std::optional<std::size_t> CoherentCube::split_point(CubeChain const& c) {
    auto const i = source(c), j = target(c);
    for (std::size_t l = i + 1; l < j; ++l) {
      if (c.front() & (1u << l)) {
        return l;
      }
    }
    return std::nullopt;
  }

  std::pair<CubeChain, CubeChain> CoherentCube::split(CubeChain const& c, std::size_t l) {
    auto const    i = source(c), j = target(c);
    std::uint32_t left_mask  = ((1u << (l + 1)) - 1) & ~((1u << i) - 1);
    std::uint32_t right_mask = ((j == 31 ? ~0u : (1u << (j + 1)) - 1)) & ~((1u << l) - 1);
    CubeChain     left(c.size()), right(c.size());
    for (std::size_t t = 0; t < c.size(); ++t) {
      left[t]  = c[t] & left_mask;
      right[t] = c[t] & right_mask;
    }
    return {left, right};
  }

  CubeChain CoherentCube::apply(std::vector<std::size_t> const& theta, CubeChain const& c) {
    CubeChain out(c.size(), 0);
    for (std::size_t t = 0; t < c.size(); ++t) {
      for (std::size_t v = 0; v < theta.size(); ++v) {
        if (c[t] & (1u << v)) {
          out[t] |= 1u << theta[v];
        }
      }
    }
    return out;
  }

  std::string CoherentCube::render(CubeChain const& c) {
    std::string out;
    for (std::size_t t = 0; t < c.size(); ++t) {
      out += t ? "⊆{" : "{";
      bool first = true;
      for (std::size_t v = 0; v < 32; ++v) {
        if (c[t] & (1u << v)) {
          out += (first ? "" : ",") + std::to_string(v);
          first = false;
        }
      }
      out += "}";
    }
    return out;
  }

  FiniteCategory CoherentCube::poset(std::size_t i, std::size_t j) const {
    auto const&                    p = subsets(i, j);
    std::vector<std::vector<bool>> leq(p.size(), std::vector<bool>(p.size()));
    std::vector<std::string>       labels;
    for (std::size_t a = 0; a < p.size(); ++a) {
      labels.push_back(render({p[a]}));
      for (std::size_t b = 0; b < p.size(); ++b) {
        leq[a][b] = (p[a] & p[b]) == p[a];
      }
    }
    return FiniteCategory::from_poset(leq, std::move(labels));
  }

  TruncatedSimplicialSet CoherentCube::hom(std::size_t i, std::size_t j, std::size_t dim) const {
    return nerve(poset(i, j), dim).set;
  }

}  // namespace catcheck
