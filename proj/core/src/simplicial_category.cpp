#include "catcheck/simplicial/simplicial_category.hpp"

#include <map>

#include "catcheck/error.hpp"
#include "catcheck/simplicial/horn.hpp"

namespace catcheck {

  SimplicialCategory::SimplicialCategory(std::vector<FiniteCategory> levels,
                                         Tables                      faces,
                                         Tables                      degeneracies)
      : _levels(std::move(levels)),
        _faces(std::move(faces)),
        _degeneracies(std::move(degeneracies)) {
    if (_levels.empty()) {
      throw Error("a simplicial category needs level 0");
    }
    auto const D = dimension();
    _faces.resize(D + 1);
    _degeneracies.resize(D + 1);
    for (std::size_t k = 0; k <= D; ++k) {
      if (_levels[k].object_count() != _levels[0].object_count()) {
        throw Error("level " + std::to_string(k) + " has a different object set");
      }
      std::size_t const nf = k == 0 ? 0 : k + 1;
      std::size_t const nd = k == D ? 0 : k + 1;
      if (_faces[k].size() != nf || _degeneracies[k].size() != nd) {
        throw Error("level " + std::to_string(k) + " has the wrong number of structure maps");
      }
      for (std::size_t i = 0; i < nf; ++i) {
        if (_faces[k][i].size() != _levels[k].morphism_count()) {
          throw Error("face table has the wrong length at level " + std::to_string(k));
        }
        for (auto v : _faces[k][i]) {
          if (v >= _levels[k - 1].morphism_count()) {
            throw Error("face value out of range at level " + std::to_string(k));
          }
        }
      }
      for (std::size_t i = 0; i < nd; ++i) {
        if (_degeneracies[k][i].size() != _levels[k].morphism_count()) {
          throw Error("degeneracy table has the wrong length at level " + std::to_string(k));
        }
        for (auto v : _degeneracies[k][i]) {
          if (v >= _levels[k + 1].morphism_count()) {
            throw Error("degeneracy value out of range at level " + std::to_string(k));
          }
        }
      }
    }
  }

  SimplicialCategory SimplicialCategory::discrete(FiniteCategory const& c, std::size_t dim) {
    std::vector<std::size_t> id(c.morphism_count());
    for (std::size_t f = 0; f < id.size(); ++f) {
      id[f] = f;
    }
    Tables faces(dim + 1), degen(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
      if (k > 0) {
        faces[k].assign(k + 1, id);
      }
      if (k < dim) {
        degen[k].assign(k + 1, id);
      }
    }
    return SimplicialCategory(std::vector<FiniteCategory>(dim + 1, c), std::move(faces),
                              std::move(degen));
  }

  SimplicialCategory SimplicialCategory::product(SimplicialCategory const& a,
                                                 SimplicialCategory const& b) {
    auto const                  D = std::min(a.dimension(), b.dimension());
    std::vector<FiniteCategory> levels;
    Tables                      faces(D + 1), degen(D + 1);
    for (std::size_t k = 0; k <= D; ++k) {
      levels.push_back(FiniteCategory::product(a.level(k), b.level(k)));
    }
    auto combine = [&](std::size_t k, std::size_t to, auto const& fa, auto const& fb) {
      std::vector<std::size_t> t;
      auto const               mb = b.level(k).morphism_count();
      auto const               mt = b.level(to).morphism_count();
      for (std::size_t f = 0; f < a.level(k).morphism_count(); ++f) {
        for (std::size_t g = 0; g < mb; ++g) {
          t.push_back(fa(f) * mt + fb(g));
        }
      }
      return t;
    };
    for (std::size_t k = 0; k <= D; ++k) {
      for (std::size_t i = 0; k > 0 && i <= k; ++i) {
        faces[k].push_back(combine(
            k, k - 1, [&](std::size_t f) { return a.face(k, i, f); },
            [&](std::size_t g) { return b.face(k, i, g); }));
      }
      for (std::size_t i = 0; k < D && i <= k; ++i) {
        degen[k].push_back(combine(
            k, k + 1, [&](std::size_t f) { return a.degeneracy(k, i, f); },
            [&](std::size_t g) { return b.degeneracy(k, i, g); }));
      }
    }
    return SimplicialCategory(std::move(levels), std::move(faces), std::move(degen));
  }

  SimplicialCategory SimplicialCategory::from_cube(CoherentCube const& cube, std::size_t dim) {
    auto const                                       n = cube.n();
    std::vector<FiniteCategory>                      levels;
    std::vector<std::map<CubeChain, std::size_t>>    index(dim + 1);
    std::vector<std::string>                         objects;
    for (std::size_t i = 0; i <= n; ++i) {
      objects.push_back(std::to_string(i));
    }
    for (std::size_t k = 0; k <= dim; ++k) {
      std::vector<FiniteCategory::Arrow> arrows;
      std::vector<CubeChain>             all;
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
          for (auto& c : cube.chains(i, j, k)) {
            index[k].emplace(c, all.size());
            arrows.push_back({i, j, CoherentCube::render(c)});
            all.push_back(std::move(c));
          }
        }
      }
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i <= n; ++i) {
        ids.push_back(index[k].at(CoherentCube::identity(i, k)));
      }
      levels.push_back(FiniteCategory::generate(
          objects, std::move(arrows), std::move(ids), [&](std::size_t g, std::size_t f) {
            return index[k].at(CoherentCube::compose(all[g], all[f]));
          }));
    }
    Tables faces(dim + 1), degen(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
      std::vector<CubeChain> all(index[k].size());
      for (auto const& [c, f] : index[k]) {
        all[f] = c;
      }
      for (std::size_t i = 0; k > 0 && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (auto const& c : all) {
          t.push_back(index[k - 1].at(CoherentCube::face(c, i)));
        }
        faces[k].push_back(std::move(t));
      }
      for (std::size_t i = 0; k < dim && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (auto const& c : all) {
          t.push_back(index[k + 1].at(CoherentCube::degeneracy(c, i)));
        }
        degen[k].push_back(std::move(t));
      }
    }
    return SimplicialCategory(std::move(levels), std::move(faces), std::move(degen));
  }

  bool SimplicialCategory::is_discrete() const {
    for (std::size_t k = 0; k <= dimension(); ++k) {
      auto const& c = _levels[k];
      if (c.morphism_count() != _levels[0].morphism_count()) {
        return false;
      }
      for (std::size_t f = 0; f < c.morphism_count(); ++f) {
        if (c.domain(f) != _levels[0].domain(f) || c.codomain(f) != _levels[0].codomain(f)) {
          return false;
        }
        for (std::size_t g = 0; g < c.morphism_count(); ++g) {
          if (c.codomain(f) == c.domain(g)
              && c.compose(g, f) != _levels[0].compose(g, f)) {
            return false;
          }
        }
      }
      for (auto const& t : _faces[k]) {
        for (std::size_t f = 0; f < t.size(); ++f) {
          if (t[f] != f) {
            return false;
          }
        }
      }
      for (auto const& t : _degeneracies[k]) {
        for (std::size_t f = 0; f < t.size(); ++f) {
          if (t[f] != f) {
            return false;
          }
        }
      }
    }
    return true;
  }

  CheckReport SimplicialCategory::check_axioms() const {
    CheckReport report;
    auto const  D = dimension();
    for (std::size_t k = 0; k <= D; ++k) {
      report.merge(_levels[k].check_laws(), "level " + std::to_string(k));
    }
    auto check_functor_map = [&](std::string const& name, std::size_t from, std::size_t to,
                                 std::vector<std::size_t> const& t) {
      auto const& a = _levels[from];
      auto const& b = _levels[to];
      for (std::size_t f = 0; f < a.morphism_count(); ++f) {
        if (b.domain(t[f]) != a.domain(f) || b.codomain(t[f]) != a.codomain(f)) {
          report.fail(name, "moves the endpoints of a morphism", {{"morphism", a.to_json(f)}});
          return;
        }
      }
      for (std::size_t x = 0; x < a.object_count(); ++x) {
        if (t[a.identity(x)] != b.identity(x)) {
          report.fail(name, "does not preserve an identity", {{"object", x}});
          return;
        }
      }
      for (std::size_t f = 0; f < a.morphism_count(); ++f) {
        for (auto g : a.out(a.codomain(f))) {
          if (t[a.compose(g, f)] != b.compose(t[g], t[f])) {
            report.fail(name, "does not preserve composition",
                        {{"f", a.to_json(f)}, {"g", a.to_json(g)}});
            return;
          }
        }
      }
      report.pass(name);
    };
    for (std::size_t k = 0; k <= D; ++k) {
      for (std::size_t i = 0; k > 0 && i <= k; ++i) {
        check_functor_map("d_" + std::to_string(i) + " on level " + std::to_string(k), k, k - 1,
                          _faces[k][i]);
      }
      for (std::size_t i = 0; k < D && i <= k; ++i) {
        check_functor_map("s_" + std::to_string(i) + " on level " + std::to_string(k), k, k + 1,
                          _degeneracies[k][i]);
      }
    }
    std::vector<std::size_t> sizes;
    for (auto const& c : _levels) {
      sizes.push_back(c.morphism_count());
    }
    TruncatedSimplicialSet morphisms(sizes, _faces, _degeneracies);
    report.merge(morphisms.check_identities(), "morphisms");
    return report;
  }

  TruncatedSimplicialSet SimplicialCategory::mapping_space(std::size_t x, std::size_t y) const {
    auto const                            D = dimension();
    std::vector<std::size_t>              sizes;
    std::vector<std::map<std::size_t, std::size_t>> position(D + 1);
    std::vector<std::vector<std::string>> labels(D + 1);
    for (std::size_t k = 0; k <= D; ++k) {
      auto const& h = _levels[k].hom(x, y);
      sizes.push_back(h.size());
      for (std::size_t p = 0; p < h.size(); ++p) {
        position[k].emplace(h[p], p);
        labels[k].push_back(_levels[k].arrow(h[p]).label);
      }
    }
    Tables faces(D + 1), degen(D + 1);
    for (std::size_t k = 0; k <= D; ++k) {
      auto const& h = _levels[k].hom(x, y);
      for (std::size_t i = 0; k > 0 && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (auto f : h) {
          t.push_back(position[k - 1].at(_faces[k][i][f]));
        }
        faces[k].push_back(std::move(t));
      }
      for (std::size_t i = 0; k < D && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (auto f : h) {
          t.push_back(position[k + 1].at(_degeneracies[k][i][f]));
        }
        degen[k].push_back(std::move(t));
      }
    }
    return TruncatedSimplicialSet(std::move(sizes), std::move(faces), std::move(degen),
                                  std::move(labels));
  }

  CheckReport SimplicialCategory::check_fibrant(std::size_t dim) const {
    CheckReport report;
    for (std::size_t x = 0; x < object_count(); ++x) {
      for (std::size_t y = 0; y < object_count(); ++y) {
        auto const audit = horn_check(mapping_space(x, y), HornKind::all, dim);
        report.merge(audit.report, "Map(" + _levels[0].object_label(x) + ","
                                       + _levels[0].object_label(y) + ")");
      }
    }
    return report;
  }

  SimplicialFunctor identity_functor(SimplicialCategory const& c) {
    SimplicialFunctor f;
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      f.objects.push_back(x);
    }
    for (std::size_t k = 0; k <= c.dimension(); ++k) {
      std::vector<std::size_t> level(c.level(k).morphism_count());
      for (std::size_t m = 0; m < level.size(); ++m) {
        level[m] = m;
      }
      f.levels.push_back(std::move(level));
    }
    return f;
  }

  SimplicialFunctor product_functor(SimplicialFunctor const&  f,
                                    SimplicialFunctor const&  g,
                                    SimplicialCategory const& g_source,
                                    SimplicialCategory const& g_target) {
    SimplicialFunctor out;
    auto const        nb = g_source.object_count();
    auto const        nt = g_target.object_count();
    for (std::size_t a = 0; a < f.objects.size(); ++a) {
      for (std::size_t b = 0; b < nb; ++b) {
        out.objects.push_back(f.objects[a] * nt + g.objects[b]);
      }
    }
    auto const D = std::min(f.levels.size(), g.levels.size());
    for (std::size_t k = 0; k < D; ++k) {
      auto const               mb = g_source.level(k).morphism_count();
      auto const               mt = g_target.level(k).morphism_count();
      std::vector<std::size_t> level;
      for (std::size_t a = 0; a < f.levels[k].size(); ++a) {
        for (std::size_t b = 0; b < mb; ++b) {
          level.push_back(f.levels[k][a] * mt + g.levels[k][b]);
        }
      }
      out.levels.push_back(std::move(level));
    }
    return out;
  }

  CheckReport check_functor(SimplicialFunctor const&  f,
                            SimplicialCategory const& source,
                            SimplicialCategory const& target) {
    CheckReport report;
    auto const  D = std::min(source.dimension(), target.dimension());
    if (f.objects.size() != source.object_count() || f.levels.size() < D + 1) {
      report.fail("simplicial functor", "functor data has the wrong shape");
      return report;
    }
    for (std::size_t k = 0; k <= D; ++k) {
      auto const& a = source.level(k);
      auto const& b = target.level(k);
      auto const& t = f.levels[k];
      for (std::size_t m = 0; m < a.morphism_count(); ++m) {
        if (b.domain(t[m]) != f.objects[a.domain(m)]
            || b.codomain(t[m]) != f.objects[a.codomain(m)]) {
          report.fail("simplicial functor", "endpoints not preserved",
                      {{"level", k}, {"morphism", a.to_json(m)}});
          return report;
        }
        for (auto g : a.out(a.codomain(m))) {
          if (t[a.compose(g, m)] != b.compose(t[g], t[m])) {
            report.fail("simplicial functor", "composition not preserved",
                        {{"level", k}, {"f", a.to_json(m)}, {"g", a.to_json(g)}});
            return report;
          }
        }
      }
      for (std::size_t x = 0; x < a.object_count(); ++x) {
        if (t[a.identity(x)] != b.identity(f.objects[x])) {
          report.fail("simplicial functor", "identity not preserved", {{"level", k}, {"object", x}});
          return report;
        }
      }
      for (std::size_t m = 0; m < a.morphism_count(); ++m) {
        for (std::size_t i = 0; k > 0 && i <= k; ++i) {
          if (f.levels[k - 1][source.face(k, i, m)] != target.face(k, i, t[m])) {
            report.fail("simplicial functor", "does not commute with a face",
                        {{"level", k}, {"i", i}, {"morphism", a.to_json(m)}});
            return report;
          }
        }
        for (std::size_t i = 0; k < D && i <= k; ++i) {
          if (f.levels[k + 1][source.degeneracy(k, i, m)] != target.degeneracy(k, i, t[m])) {
            report.fail("simplicial functor", "does not commute with a degeneracy",
                        {{"level", k}, {"i", i}, {"morphism", a.to_json(m)}});
            return report;
          }
        }
      }
    }
    report.pass("simplicial functor");
    return report;
  }

}  // namespace catcheck
