#include "catcheck/finite_category.hpp"

#include <string>

#include "catcheck/error.hpp"

namespace catcheck {

  FiniteCategory FiniteCategory::generate(std::vector<std::string> object_labels,
                                          std::vector<Arrow>       arrows,
                                          std::vector<Morphism>    identities,
                                          ComposeFn const&         compose) {
    FiniteCategory c;
    std::size_t const n = object_labels.size();
    std::size_t const m = arrows.size();
    if (identities.size() != n) {
      throw Error("finite category needs one identity per object");
    }
    for (auto const& a : arrows) {
      if (a.domain >= n || a.codomain >= n) {
        throw Error("arrow '" + a.label + "' has an endpoint outside the "
                    + std::to_string(n) + " objects");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (identities[x] >= m || arrows[identities[x]].domain != x
          || arrows[identities[x]].codomain != x) {
        throw Error("identity of object '" + object_labels[x]
                    + "' is not an endomorphism of it");
      }
    }
    c._object_labels = std::move(object_labels);
    c._arrows        = std::move(arrows);
    c._identities    = std::move(identities);
    c._hom.assign(n * n, {});
    c._out.assign(n, {});
    c._out_position.assign(m, 0);
    for (Morphism f = 0; f < m; ++f) {
      auto const& a = c._arrows[f];
      c._hom[a.domain * n + a.codomain].push_back(f);
      c._out_position[f] = c._out[a.domain].size();
      c._out[a.domain].push_back(f);
    }
    c._after.assign(m, {});
    for (Morphism f = 0; f < m; ++f) {
      auto const& outs = c._out[c._arrows[f].codomain];
      c._after[f].reserve(outs.size());
      for (Morphism g : outs) {
        Morphism const h = compose(g, f);
        if (h >= m || c._arrows[h].domain != c._arrows[f].domain
            || c._arrows[h].codomain != c._arrows[g].codomain) {
          throw Error("composite of '" + c._arrows[g].label + "' after '"
                      + c._arrows[f].label + "' has the wrong endpoints");
        }
        c._after[f].push_back(h);
      }
    }
    for (Morphism f = 0; f < m; ++f) {
      auto const& a = c._arrows[f];
      if (c.compose(f, c._identities[a.domain]) != f
          || c.compose(c._identities[a.codomain], f) != f) {
        throw Error("identities are not units for '" + a.label + "'");
      }
    }
    return c;
  }

  FiniteCategory::Morphism FiniteCategory::compose(Morphism g,
                                                   Morphism f) const {
    auto const& af = _arrows.at(f);
    auto const& ag = _arrows.at(g);
    if (af.codomain != ag.domain) {
      throw CompositionError("'" + ag.label + "'∘'" + af.label
                             + "' undefined: codomain of '" + af.label
                             + "' is '" + _object_labels[af.codomain]
                             + "', domain of '" + ag.label + "' is '"
                             + _object_labels[ag.domain] + "'");
    }
    return _after[f][_out_position[g]];
  }

  FiniteCategory
  FiniteCategory::from_monoid(std::vector<std::vector<std::size_t>> const& table,
                              std::vector<std::string> labels) {
    std::size_t const n = table.size();
    if (labels.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
      }
    }
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw ShapeError("monoid table is not square");
      }
      arrows.push_back({0, 0, labels.at(i)});
    }
    std::optional<std::size_t> unit;
    for (std::size_t e = 0; e < n && !unit; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = table[e][x] == x && table[x][e] == x;
      }
      if (ok) {
        unit = e;
      }
    }
    if (!unit) {
      throw Error("monoid table has no two-sided unit");
    }
    return generate({"*"}, std::move(arrows), {*unit},
                    [&](Morphism g, Morphism f) { return table[g][f]; });
  }

  FiniteCategory
  FiniteCategory::from_poset(std::vector<std::vector<bool>> const& leq,
                             std::vector<std::string>              labels) {
    std::size_t const n = leq.size();
    if (labels.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (leq[i].size() != n || !leq[i][i]) {
        throw Error("poset relation must be square and reflexive");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) {
          throw Error("poset relation is not antisymmetric");
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (leq[i][j] && leq[j][k] && !leq[i][k]) {
            throw Error("poset relation is not transitive");
          }
        }
      }
    }
    std::vector<Arrow>       arrows;
    std::vector<std::size_t> index(n * n, 0);
    std::vector<Morphism>    ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][j]) {
          index[i * n + j] = arrows.size();
          arrows.push_back({i, j,
                            i == j ? "id_" + labels[i]
                                   : labels[i] + "<=" + labels[j]});
        }
      }
      ids[i] = index[i * n + i];
    }
    std::vector<Arrow> const copy = arrows;
    return generate(std::move(labels), std::move(arrows), std::move(ids),
                    [&](Morphism g, Morphism f) {
                      return index[copy[f].domain * n + copy[g].codomain];
                    });
  }

  FiniteCategory FiniteCategory::ordinal(std::size_t n) {
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        leq[i][j] = true;
      }
    }
    return from_poset(leq);
  }

  FiniteCategory FiniteCategory::product(FiniteCategory const& a,
                                         FiniteCategory const& b) {
    std::size_t const        mb = b.morphism_count();
    std::size_t const        nb = b.object_count();
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < a.object_count(); ++x) {
      for (std::size_t y = 0; y < nb; ++y) {
        labels.push_back("(" + a.object_label(x) + "," + b.object_label(y)
                         + ")");
      }
    }
    std::vector<Arrow> arrows;
    for (std::size_t f = 0; f < a.morphism_count(); ++f) {
      for (std::size_t g = 0; g < mb; ++g) {
        auto const& af = a.arrow(f);
        auto const& bg = b.arrow(g);
        arrows.push_back({af.domain * nb + bg.domain,
                          af.codomain * nb + bg.codomain,
                          "(" + af.label + "," + bg.label + ")"});
      }
    }
    std::vector<Morphism> ids;
    for (std::size_t x = 0; x < a.object_count(); ++x) {
      for (std::size_t y = 0; y < nb; ++y) {
        ids.push_back(a.identity(x) * mb + b.identity(y));
      }
    }
    return generate(std::move(labels), std::move(arrows), std::move(ids),
                    [&](Morphism g, Morphism f) {
                      return a.compose(g / mb, f / mb) * mb
                             + b.compose(g % mb, f % mb);
                    });
  }

  std::optional<FiniteCategory::Morphism>
  FiniteCategory::inverse(Morphism f) const {
    auto const& a = _arrows.at(f);
    for (Morphism g : hom(a.codomain, a.domain)) {
      if (compose(g, f) == _identities[a.domain]
          && compose(f, g) == _identities[a.codomain]) {
        return g;
      }
    }
    return std::nullopt;
  }

  bool FiniteCategory::is_groupoid() const {
    for (Morphism f = 0; f < morphism_count(); ++f) {
      if (!inverse(f)) {
        return false;
      }
    }
    return true;
  }

  CheckReport FiniteCategory::check_laws() const {
    CheckReport report;
    std::size_t triples = 0;
    for (Morphism f = 0; f < morphism_count(); ++f) {
      for (Morphism g : _out[_arrows[f].codomain]) {
        Morphism const gf = compose(g, f);
        for (Morphism h : _out[_arrows[g].codomain]) {
          ++triples;
          if (compose(h, gf) != compose(compose(h, g), f)) {
            report.fail("associativity", "h∘(g∘f) != (h∘g)∘f",
                        {{"f", _arrows[f].label},
                         {"g", _arrows[g].label},
                         {"h", _arrows[h].label}});
            return report;
          }
        }
      }
    }
    report.pass("associativity", std::to_string(triples) + " triples");
    report.pass("unit laws", "checked at construction");
    return report;
  }

  nlohmann::json FiniteCategory::to_json(Morphism f) const {
    auto const& a = _arrows.at(f);
    return {{"morphism", a.label},
            {"domain", _object_labels[a.domain]},
            {"codomain", _object_labels[a.codomain]}};
  }

}  // namespace catcheck
