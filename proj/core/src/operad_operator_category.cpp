#include "catcheck/operators/operad_operator_category.hpp"

#include <algorithm>
#include <set>

#include "catcheck/error.hpp"

namespace catcheck {

  OperadMorphism OperadOperatorCategory::make(PointedMap               alpha,
                                              std::vector<std::size_t> operations) const {
    if (operations.size() != alpha.target()) {
      throw ShapeError("expected " + std::to_string(alpha.target())
                       + " operations over " + alpha.to_string() + ", got "
                       + std::to_string(operations.size()));
    }
    for (std::size_t j = 1; j <= alpha.target(); ++j) {
      auto const k = alpha.preimage(j).size();
      if (operations[j - 1] >= _operad.size(k)) {
        throw ShapeError("operation " + std::to_string(j) + " is not an element of "
                         + _operad.name() + "(" + std::to_string(k) + ")");
      }
    }
    return {std::move(alpha), std::move(operations)};
  }

  OperadMorphism OperadOperatorCategory::identity(Object n) const {
    return {PointedMap::identity(n), std::vector<std::size_t>(n, _operad.unit())};
  }

  OperadMorphism OperadOperatorCategory::compose(Morphism const& outer,
                                                 Morphism const& inner) const {
    if (inner.map.target() != outer.map.source()) {
      throw CompositionError("operator morphisms not composable: " + render(outer)
                             + " ∘ " + render(inner));
    }
    PointedMap               gamma = catcheck::compose(outer.map, inner.map);
    std::vector<std::size_t> ops;
    ops.reserve(gamma.target());
    for (std::size_t k = 1; k <= gamma.target(); ++k) {
      std::vector<std::size_t>      blocks;
      std::vector<SetOperad::Entry> phi;
      for (auto j : outer.map.preimage(k)) {
        auto const pre = inner.map.preimage(j);
        blocks.insert(blocks.end(), pre.begin(), pre.end());
        phi.push_back({pre.size(), inner.operations[j - 1]});
      }
      auto const composite = _operad.compose({phi.size(), outer.operations[k - 1]}, phi);
      auto       increasing = blocks;
      std::sort(increasing.begin(), increasing.end());
      std::vector<std::size_t> rank(blocks.size());
      for (std::size_t p = 0; p < blocks.size(); ++p) {
        rank[p] = static_cast<std::size_t>(
            std::lower_bound(increasing.begin(), increasing.end(), blocks[p])
            - increasing.begin());
      }
      ops.push_back(_operad.relabel(composite.arity, composite.element, rank));
    }
    return {std::move(gamma), std::move(ops)};
  }

  OperadMorphism OperadOperatorCategory::canonical_over(PointedMap const& alpha) const {
    std::vector<std::size_t> ops;
    for (std::size_t j = 1; j <= alpha.target(); ++j) {
      Word w(alpha.preimage(j).size());
      for (std::size_t t = 0; t < w.size(); ++t) {
        w[t] = t;
      }
      ops.push_back(_operad.index(w));
    }
    return make(alpha, std::move(ops));
  }

  std::vector<OperadMorphism>
  OperadOperatorCategory::enumerate_hom_over(PointedMap const& alpha) const {
    std::vector<std::size_t> sizes;
    for (std::size_t j = 1; j <= alpha.target(); ++j) {
      sizes.push_back(_operad.size(alpha.preimage(j).size()));
    }
    std::vector<OperadMorphism> out;
    std::vector<std::size_t>    digit(sizes.size(), 0);
    while (true) {
      out.push_back({alpha, digit});
      std::size_t c = sizes.size();
      while (true) {
        if (c == 0) {
          return out;
        }
        --c;
        if (++digit[c] < sizes[c]) {
          break;
        }
        digit[c] = 0;
      }
    }
  }

  std::vector<OperadMorphism> OperadOperatorCategory::enumerate_hom(Object m, Object n) const {
    std::vector<OperadMorphism> out;
    for (auto const& alpha : enumerate_pointed_maps(m, n)) {
      auto over = enumerate_hom_over(alpha);
      out.insert(out.end(), over.begin(), over.end());
    }
    return out;
  }

  std::uint64_t OperadOperatorCategory::hom_size(Object m, Object n) const {
    std::uint64_t total = 0;
    for (auto const& alpha : enumerate_pointed_maps(m, n)) {
      std::uint64_t over = 1;
      for (std::size_t j = 1; j <= n; ++j) {
        over *= _operad.size(alpha.preimage(j).size());
      }
      total += over;
    }
    return total;
  }

  CheckReport OperadOperatorCategory::check_projection_isomorphism(std::size_t max_arity) const {
    CheckReport report;
    bool        bijective = true;
    for (std::size_t m = 0; m <= max_arity && bijective; ++m) {
      for (std::size_t n = 0; n <= max_arity; ++n) {
        auto const           homs = enumerate_hom(m, n);
        std::set<PointedMap> images;
        for (auto const& f : homs) {
          images.insert(f.map);
        }
        auto const expected = pointed_map_count_formula(m, n);
        if (homs.size() != expected || images.size() != expected) {
          bijective = false;
          report.fail("projection bijective on hom-sets",
                      "hom([" + std::to_string(m) + "]_+, [" + std::to_string(n)
                          + "]_+) does not project bijectively",
                      {{"m", m},
                       {"n", n},
                       {"hom_size", homs.size()},
                       {"distinct_images", images.size()},
                       {"pointed_maps", expected}});
          break;
        }
      }
    }
    if (bijective) {
      report.pass("projection bijective on hom-sets",
                  "arities ≤ " + std::to_string(max_arity));
    }

    bool          functorial = true;
    std::uint64_t pairs      = 0;
    for (std::size_t a = 0; a <= max_arity && functorial; ++a) {
      for (std::size_t b = 0; b <= max_arity && functorial; ++b) {
        auto const fs = enumerate_hom(a, b);
        for (std::size_t c = 0; c <= max_arity && functorial; ++c) {
          auto const gs = enumerate_hom(b, c);
          for (auto const& f : fs) {
            for (auto const& g : gs) {
              ++pairs;
              if (!(compose(g, f).map == catcheck::compose(g.map, f.map))) {
                functorial = false;
                report.fail("projection functorial", "p(g∘f) != p(g)∘p(f)",
                            {{"f", to_json(f)}, {"g", to_json(g)}});
                break;
              }
            }
            if (!functorial) {
              break;
            }
          }
        }
      }
    }
    if (functorial) {
      report.pass("projection functorial", std::to_string(pairs) + " composable pairs");
    }
    return report;
  }

  nlohmann::json OperadOperatorCategory::to_json(Morphism const& f) const {
    nlohmann::json ops = nlohmann::json::array();
    for (std::size_t j = 1; j <= f.map.target(); ++j) {
      ops.push_back(_operad.word(f.map.preimage(j).size(), f.operations[j - 1]));
    }
    return {{"operad", _operad.name()}, {"map", f.map.to_json()}, {"operations", ops}};
  }

  std::string OperadOperatorCategory::render(Morphism const& f) const {
    std::string out = "(" + f.map.to_string() + ", [";
    for (std::size_t j = 1; j <= f.map.target(); ++j) {
      out += (j > 1 ? ", " : "")
             + nlohmann::json(_operad.word(f.map.preimage(j).size(), f.operations[j - 1])).dump();
    }
    return out + "])";
  }

}  // namespace catcheck
