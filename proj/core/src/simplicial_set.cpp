#include "catcheck/simplicial/simplicial_set.hpp"

#include <map>

#include "catcheck/error.hpp"

namespace catcheck {

  TruncatedSimplicialSet::TruncatedSimplicialSet(std::vector<std::size_t>              sizes,
                                                 Tables                                faces,
                                                 Tables                                degeneracies,
                                                 std::vector<std::vector<std::string>> labels)
      : _sizes(std::move(sizes)),
        _faces(std::move(faces)),
        _degeneracies(std::move(degeneracies)),
        _labels(std::move(labels)) {
    if (_sizes.empty()) {
      throw Error("a truncated simplicial set needs level 0");
    }
    auto const D = dimension();
    _faces.resize(D + 1);
    _degeneracies.resize(D + 1);
    for (std::size_t k = 0; k <= D; ++k) {
      std::size_t const want_faces = k == 0 ? 0 : k + 1;
      std::size_t const want_degen = k == D ? 0 : k + 1;
      if (_faces[k].size() != want_faces || _degeneracies[k].size() != want_degen) {
        throw Error("level " + std::to_string(k) + " needs " + std::to_string(want_faces)
                    + " faces and " + std::to_string(want_degen) + " degeneracies");
      }
      for (auto const& d : _faces[k]) {
        if (d.size() != _sizes[k]) {
          throw Error("face table at level " + std::to_string(k) + " has the wrong length");
        }
        for (auto v : d) {
          if (v >= _sizes[k - 1]) {
            throw Error("face value out of range at level " + std::to_string(k));
          }
        }
      }
      for (auto const& s : _degeneracies[k]) {
        if (s.size() != _sizes[k]) {
          throw Error("degeneracy table at level " + std::to_string(k)
                      + " has the wrong length");
        }
        for (auto v : s) {
          if (v >= _sizes[k + 1]) {
            throw Error("degeneracy value out of range at level " + std::to_string(k));
          }
        }
      }
    }
    if (_labels.empty()) {
      for (std::size_t k = 0; k <= D; ++k) {
        std::vector<std::string> level;
        for (std::size_t x = 0; x < _sizes[k]; ++x) {
          level.push_back(std::to_string(x));
        }
        _labels.push_back(std::move(level));
      }
    } else if (_labels.size() != D + 1) {
      throw Error("labels must be given for every level");
    }
    _degenerate.assign(D + 1, {});
    for (std::size_t k = 0; k <= D; ++k) {
      _degenerate[k].assign(_sizes[k], false);
      if (_labels[k].size() != _sizes[k]) {
        throw Error("level " + std::to_string(k) + " has the wrong number of labels");
      }
    }
    for (std::size_t k = 0; k < D; ++k) {
      for (auto const& s : _degeneracies[k]) {
        for (auto v : s) {
          _degenerate[k + 1][v] = true;
        }
      }
    }
  }

  std::size_t TruncatedSimplicialSet::nondegenerate_count(std::size_t k) const {
    std::size_t n = 0;
    for (bool d : _degenerate.at(k)) {
      n += d ? 0 : 1;
    }
    return n;
  }

  CheckReport TruncatedSimplicialSet::check_identities() const {
    CheckReport report;
    auto const  D     = dimension();
    std::size_t cases = 0;
    auto        fail  = [&](std::string rule, std::size_t k, std::size_t i, std::size_t j,
                    std::size_t x) {
      report.fail("simplicial identities", rule + " fails",
                  {{"level", k}, {"i", i}, {"j", j}, {"simplex", x}, {"label", _labels[k][x]}});
    };
    for (std::size_t k = 2; k <= D; ++k) {
      for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          for (std::size_t x = 0; x < _sizes[k]; ++x) {
            ++cases;
            if (face(k - 1, i, face(k, j, x)) != face(k - 1, j - 1, face(k, i, x))) {
              fail("d_i d_j = d_{j-1} d_i", k, i, j, x);
              return report;
            }
          }
        }
      }
    }
    for (std::size_t k = 0; k < D; ++k) {
      for (std::size_t j = 0; j <= k; ++j) {
        for (std::size_t i = 0; i <= k + 1; ++i) {
          for (std::size_t x = 0; x < _sizes[k]; ++x) {
            auto const lhs = face(k + 1, i, degeneracy(k, j, x));
            ++cases;
            if (i == j || i == j + 1) {
              if (lhs != x) {
                fail("d_i s_j = id", k, i, j, x);
                return report;
              }
            } else if (i < j) {
              if (lhs != degeneracy(k - 1, j - 1, face(k, i, x))) {
                fail("d_i s_j = s_{j-1} d_i", k, i, j, x);
                return report;
              }
            } else if (lhs != degeneracy(k - 1, j, face(k, i - 1, x))) {
              fail("d_i s_j = s_j d_{i-1}", k, i, j, x);
              return report;
            }
          }
        }
      }
    }
    for (std::size_t k = 0; k + 2 <= D; ++k) {
      for (std::size_t j = 0; j <= k; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
          for (std::size_t x = 0; x < _sizes[k]; ++x) {
            ++cases;
            if (degeneracy(k + 1, i, degeneracy(k, j, x))
                != degeneracy(k + 1, j + 1, degeneracy(k, i, x))) {
              fail("s_i s_j = s_{j+1} s_i", k, i, j, x);
              return report;
            }
          }
        }
      }
    }
    report.pass("simplicial identities", std::to_string(cases) + " cases to dimension "
                                             + std::to_string(D));
    return report;
  }

  nlohmann::json TruncatedSimplicialSet::to_json() const {
    nlohmann::json levels = nlohmann::json::array();
    for (std::size_t k = 0; k <= dimension(); ++k) {
      std::vector<bool> degenerate(_degenerate[k].begin(), _degenerate[k].end());
      levels.push_back({{"size", _sizes[k]},
                        {"labels", _labels[k]},
                        {"degenerate", degenerate},
                        {"faces", _faces[k]},
                        {"degeneracies", _degeneracies[k]}});
    }
    return {{"dimension", dimension()}, {"levels", levels}};
  }

  TruncatedSimplicialSet TruncatedSimplicialSet::from_json(nlohmann::json const& j) {
    try {
      std::vector<std::size_t>              sizes;
      Tables                                faces;
      Tables                                degeneracies;
      std::vector<std::vector<std::string>> labels;
      for (auto const& level : j.at("levels")) {
        sizes.push_back(level.at("size").get<std::size_t>());
        faces.push_back(level.value("faces", std::vector<std::vector<std::size_t>>{}));
        degeneracies.push_back(
            level.value("degeneracies", std::vector<std::vector<std::size_t>>{}));
        if (level.contains("labels")) {
          labels.push_back(level.at("labels").get<std::vector<std::string>>());
        }
      }
      if (!labels.empty() && labels.size() != sizes.size()) {
        throw Error("labels must be given for every level or none");
      }
      return TruncatedSimplicialSet(std::move(sizes), std::move(faces),
                                    std::move(degeneracies), std::move(labels));
    } catch (nlohmann::json::exception const& e) {
      throw Error(std::string("malformed simplicial set: ") + e.what());
    }
  }

  CheckReport check_simplicial_map(TruncatedSimplicialSet const& x,
                                   TruncatedSimplicialSet const& y,
                                   SimplicialMap const&          f) {
    CheckReport report;
    auto const  D = std::min(x.dimension(), y.dimension());
    if (f.levels.size() < D + 1) {
      report.fail("simplicial map", "map is missing levels");
      return report;
    }
    for (std::size_t k = 0; k <= D; ++k) {
      if (f.levels[k].size() != x.size(k)) {
        report.fail("simplicial map", "level " + std::to_string(k) + " has the wrong length");
        return report;
      }
      for (auto v : f.levels[k]) {
        if (v >= y.size(k)) {
          report.fail("simplicial map", "value out of range at level " + std::to_string(k));
          return report;
        }
      }
    }
    std::size_t cases = 0;
    for (std::size_t k = 0; k <= D; ++k) {
      for (std::size_t s = 0; s < x.size(k); ++s) {
        auto const fs = f.levels[k][s];
        for (std::size_t i = 0; k > 0 && i <= k; ++i) {
          ++cases;
          if (f.levels[k - 1][x.face(k, i, s)] != y.face(k, i, fs)) {
            report.fail("simplicial map", "does not commute with d_" + std::to_string(i),
                        {{"level", k}, {"simplex", s}, {"label", x.label(k, s)}});
            return report;
          }
        }
        for (std::size_t i = 0; k < D && i <= k; ++i) {
          ++cases;
          if (f.levels[k + 1][x.degeneracy(k, i, s)] != y.degeneracy(k, i, fs)) {
            report.fail("simplicial map", "does not commute with s_" + std::to_string(i),
                        {{"level", k}, {"simplex", s}, {"label", x.label(k, s)}});
            return report;
          }
        }
      }
    }
    report.pass("simplicial map", std::to_string(cases) + " face/degeneracy squares");
    return report;
  }

  CheckReport check_isomorphism(TruncatedSimplicialSet const& x,
                                TruncatedSimplicialSet const& y,
                                SimplicialMap const&          f) {
    CheckReport report = check_simplicial_map(x, y, f);
    if (!report.passed()) {
      return report;
    }
    auto const D = std::min(x.dimension(), y.dimension());
    for (std::size_t k = 0; k <= D; ++k) {
      std::vector<bool> hit(y.size(k), false);
      bool              injective = true;
      for (auto v : f.levels[k]) {
        if (hit[v]) {
          injective = false;
        }
        hit[v] = true;
      }
      if (!injective || x.size(k) != y.size(k)) {
        report.fail("bijective", "level " + std::to_string(k) + " is not a bijection",
                    {{"level", k}, {"source_size", x.size(k)}, {"target_size", y.size(k)}});
        return report;
      }
    }
    report.pass("bijective", "levels 0.." + std::to_string(D));
    return report;
  }

  std::vector<std::vector<std::size_t>> monotone_maps(std::size_t k, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              a(k + 1, 0);
    while (true) {
      out.push_back(a);
      std::size_t c = k + 1;
      while (true) {
        if (c == 0) {
          return out;
        }
        --c;
        if (a[c] < n) {
          ++a[c];
          for (std::size_t t = c + 1; t <= k; ++t) {
            a[t] = a[c];
          }
          break;
        }
      }
    }
  }

  TruncatedSimplicialSet standard_simplex(std::size_t n, std::size_t dim) {
    std::vector<std::vector<std::vector<std::size_t>>> simplices;
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(dim + 1);
    std::vector<std::size_t>                               sizes;
    std::vector<std::vector<std::string>>                  labels(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
      simplices.push_back(monotone_maps(k, n));
      sizes.push_back(simplices.back().size());
      for (std::size_t s = 0; s < simplices[k].size(); ++s) {
        index[k].emplace(simplices[k][s], s);
        std::string label;
        for (auto v : simplices[k][s]) {
          label += std::to_string(v);
        }
        labels[k].push_back(label);
      }
    }
    TruncatedSimplicialSet::Tables faces(dim + 1), degen(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
      for (std::size_t i = 0; k > 0 && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (auto const& a : simplices[k]) {
          auto b = a;
          b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
          t.push_back(index[k - 1].at(b));
        }
        faces[k].push_back(std::move(t));
      }
      for (std::size_t i = 0; k < dim && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (auto const& a : simplices[k]) {
          auto b = a;
          b.insert(b.begin() + static_cast<std::ptrdiff_t>(i), a[i]);
          t.push_back(index[k + 1].at(b));
        }
        degen[k].push_back(std::move(t));
      }
    }
    return TruncatedSimplicialSet(std::move(sizes), std::move(faces), std::move(degen),
                                  std::move(labels));
  }

  TruncatedSimplicialSet product(TruncatedSimplicialSet const& x,
                                 TruncatedSimplicialSet const& y) {
    auto const                            D = std::min(x.dimension(), y.dimension());
    std::vector<std::size_t>              sizes;
    std::vector<std::vector<std::string>> labels(D + 1);
    TruncatedSimplicialSet::Tables        faces(D + 1), degen(D + 1);
    for (std::size_t k = 0; k <= D; ++k) {
      sizes.push_back(x.size(k) * y.size(k));
      for (std::size_t a = 0; a < x.size(k); ++a) {
        for (std::size_t b = 0; b < y.size(k); ++b) {
          labels[k].push_back("(" + x.label(k, a) + "," + y.label(k, b) + ")");
        }
      }
      for (std::size_t i = 0; k > 0 && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (std::size_t a = 0; a < x.size(k); ++a) {
          for (std::size_t b = 0; b < y.size(k); ++b) {
            t.push_back(x.face(k, i, a) * y.size(k - 1) + y.face(k, i, b));
          }
        }
        faces[k].push_back(std::move(t));
      }
      for (std::size_t i = 0; k < D && i <= k; ++i) {
        std::vector<std::size_t> t;
        for (std::size_t a = 0; a < x.size(k); ++a) {
          for (std::size_t b = 0; b < y.size(k); ++b) {
            t.push_back(x.degeneracy(k, i, a) * y.size(k + 1) + y.degeneracy(k, i, b));
          }
        }
        degen[k].push_back(std::move(t));
      }
    }
    return TruncatedSimplicialSet(std::move(sizes), std::move(faces), std::move(degen),
                                  std::move(labels));
  }

}  // namespace catcheck
