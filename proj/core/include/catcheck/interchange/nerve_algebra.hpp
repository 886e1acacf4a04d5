#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "catcheck/error.hpp"
#include "catcheck/finite_category.hpp"
#include "catcheck/interchange/algebra_functor.hpp"
#include "catcheck/simplicial/nerve.hpp"

namespace catcheck {

  // Fin_* on [0]_+..[n]_+ as a finite category; morphisms are numbered as
  // in enumerate_pointed_maps, grouped by (source, target).
  struct PointedSkeleton {
    FiniteCategory                    category;
    std::vector<PointedMap>           maps;
    std::map<PointedMap, std::size_t> index;
  };

  [[nodiscard]] PointedSkeleton pointed_skeleton(std::size_t max_arity);

  // The vertex-level interchange map for an algebra functor F at simplicial
  // level 0, where N^s agrees with N: the nerve of F restricted to arities
  // ≤ N, as a map from N(O^⊗_{≤N}) to the nerve of the image of F, both over
  // N(Fin_*).
  template <SymmetricMonoidalCategory C>
  struct AlgebraNerve {
    FiniteCategory                                     source;
    FiniteCategory                                     image;
    PointedSkeleton                                    base;
    std::vector<OperadMorphism>                        source_morphisms;
    std::vector<typename AlgebraFunctor<C>::Morphism> image_morphisms;
    Nerve                                              source_nerve;
    Nerve                                              image_nerve;
    Nerve                                              base_nerve;
    SimplicialMap                                      map;
    SimplicialMap                                      source_projection;
    SimplicialMap                                      image_projection;
    CheckReport                                        report;
  };

  namespace detail {

    inline SimplicialMap compose_maps(SimplicialMap const& g, SimplicialMap const& f) {
      SimplicialMap out;
      for (std::size_t k = 0; k < f.levels.size() && k < g.levels.size(); ++k) {
        std::vector<std::size_t> level;
        for (auto x : f.levels[k]) {
          level.push_back(g.levels[k].at(x));
        }
        out.levels.push_back(std::move(level));
      }
      return out;
    }

  }  // namespace detail

  // Checks: N(F) is simplicial; it lies over N(Fin_*); the 1-simplex over
  // the fold [2]_+ → [1]_+ is (fold, {μ}); every 1-simplex over an inert map
  // goes to a cocartesian lift. Throws BoundError when dim > 3.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] AlgebraNerve<C> nerve_algebra(AlgebraFunctor<C> const& f,
                                              std::size_t              dim,
                                              std::size_t              arity_bound) {
    if (dim > 3) {
      throw BoundError("nerve_algebra is implemented for dimensions ≤ 3");
    }
    auto const  N   = std::min(arity_bound, f.arity_bound());
    auto const& src = f.source();
    auto const& tgt = f.target();

    std::vector<std::string>           objects;
    std::vector<FiniteCategory::Arrow> source_arrows, image_arrows;
    std::vector<std::size_t>           source_ids, image_ids;
    std::vector<OperadMorphism>        source_morphisms;
    std::vector<typename AlgebraFunctor<C>::Morphism> image_morphisms;
    std::map<std::string, std::size_t> source_index, image_index;
    std::vector<std::size_t>           on_morphisms;
    for (std::size_t n = 0; n <= N; ++n) {
      objects.push_back("[" + std::to_string(n) + "]+");
    }
    auto add_image = [&](typename AlgebraFunctor<C>::Morphism const& g) {
      auto const key    = tgt.to_json(g).dump();
      auto [it, fresh] = image_index.emplace(key, image_morphisms.size());
      if (fresh) {
        image_arrows.push_back({g.source.size(), g.target.size(), tgt.render(g)});
        image_morphisms.push_back(g);
      }
      return it->second;
    };
    for (std::size_t m = 0; m <= N; ++m) {
      for (std::size_t n = 0; n <= N; ++n) {
        for (auto const& a : src.enumerate_hom(m, n)) {
          source_index.emplace(src.to_json(a).dump(), source_morphisms.size());
          source_arrows.push_back({m, n, src.render(a)});
          source_morphisms.push_back(a);
          on_morphisms.push_back(add_image(f.on_morphism(a)));
        }
      }
    }
    for (std::size_t n = 0; n <= N; ++n) {
      source_ids.push_back(source_index.at(src.to_json(src.identity(n)).dump()));
      image_ids.push_back(on_morphisms[source_ids.back()]);
    }
    auto source = FiniteCategory::generate(
        objects, source_arrows, source_ids, [&](std::size_t g, std::size_t h) {
          return source_index.at(
              src.to_json(src.compose(source_morphisms[g], source_morphisms[h])).dump());
        });
    auto image = FiniteCategory::generate(
        objects, image_arrows, image_ids, [&](std::size_t g, std::size_t h) {
          auto const key
              = tgt.to_json(tgt.compose(image_morphisms[g], image_morphisms[h])).dump();
          auto it = image_index.find(key);
          if (it == image_index.end()) {
            throw Error("the image of the algebra functor is not closed under composition");
          }
          return it->second;
        });
    auto base = pointed_skeleton(N);

    std::vector<std::size_t> objects_id(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      objects_id[n] = n;
    }
    std::vector<std::size_t> source_over, image_over;
    for (auto const& a : source_morphisms) {
      source_over.push_back(base.index.at(a.map));
    }
    for (auto const& g : image_morphisms) {
      image_over.push_back(base.index.at(g.map));
    }

    auto source_nerve = nerve(source, dim);
    auto image_nerve  = nerve(image, dim);
    auto base_nerve   = nerve(base.category, dim);
    auto map          = nerve_map(source_nerve, image_nerve, objects_id, on_morphisms);
    auto source_proj  = nerve_map(source_nerve, base_nerve, objects_id, source_over);
    auto image_proj   = nerve_map(image_nerve, base_nerve, objects_id, image_over);

    CheckReport report;
    report.merge(check_simplicial_map(source_nerve.set, image_nerve.set, map), "N(F)");
    auto const over = detail::compose_maps(image_proj, map);
    report.expect(over.levels == source_proj.levels, "N(F) lies over N(Fin_*)");

    if (N >= 2) {
      auto const fold_edge
          = on_morphisms[source_index.at(src.to_json(src.canonical_over(PointedMap::fold(2))).dump())];
      auto const& g = image_morphisms[fold_edge];
      report.expect(g.components.size() == 1
                        && tgt.base().equal(g.components[0], f.algebra().mu),
                    "edge over the fold is (fold, {μ})", {}, tgt.to_json(g));
    }
    std::size_t inert = 0;
    for (std::size_t e = 0; e < source_morphisms.size(); ++e) {
      auto const& a = source_morphisms[e];
      if (!a.map.is_inert()) {
        continue;
      }
      ++inert;
      auto const& g = image_morphisms[on_morphisms[e]];
      if (!tgt.equal(g, tgt.cocartesian_lift(a.map, g.source))) {
        report.fail("inert edges are cocartesian lifts", "edge is not the lift",
                    tgt.to_json(g));
        inert = 0;
        break;
      }
    }
    if (inert) {
      report.pass("inert edges are cocartesian lifts", std::to_string(inert) + " edges");
    }
    return {std::move(source),       std::move(image),        std::move(base),
            std::move(source_morphisms), std::move(image_morphisms),
            std::move(source_nerve), std::move(image_nerve),  std::move(base_nerve),
            std::move(map),          std::move(source_proj),  std::move(image_proj),
            std::move(report)};
  }

}  // namespace catcheck
