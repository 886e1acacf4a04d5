#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/category.hpp"
#include "catcheck/error.hpp"
#include "catcheck/matrix.hpp"
#include "catcheck/operators/pointed_map.hpp"
#include "catcheck/report.hpp"

namespace catcheck {

  // A morphism (α, {f_j}) of C^⊗ from (A_1..A_m) to (B_1..B_n), with
  // f_j : ⊗_{i∈α⁻¹(j)} A_i → B_j. Preimages are tensored in increasing order.
  template <SymmetricMonoidalCategory C>
  struct OperatorMorphism {
    std::vector<typename C::Object>   source;
    std::vector<typename C::Object>   target;
    PointedMap                        map;
    std::vector<typename C::Morphism> components;
  };

  // The category of operators C^⊗ of a strict symmetric monoidal category.
  // Objects are tuples of objects of C; the tuple of length n lies over [n]_+.
  template <SymmetricMonoidalCategory C>
  class OperatorCategory {
   public:
    using BaseObject   = typename C::Object;
    using BaseMorphism = typename C::Morphism;
    using Object       = std::vector<BaseObject>;
    using Morphism     = OperatorMorphism<C>;

    explicit OperatorCategory(C base) : _base(std::move(base)) {}

    [[nodiscard]] C const& base() const noexcept {
      return _base;
    }

    // ⊗_{i∈α⁻¹(j)} x_i, the domain a component over j must have.
    [[nodiscard]] BaseObject preimage_tensor(Object const&     x,
                                             PointedMap const& alpha,
                                             std::size_t       j) const {
      BaseObject out = _base.unit();
      for (auto i : alpha.preimage(j)) {
        out = _base.tensor(out, x[i - 1]);
      }
      return out;
    }

    // Validates shapes; throws ShapeError naming the offending component.
    [[nodiscard]] Morphism make(Object                    source,
                                Object                    target,
                                PointedMap                alpha,
                                std::vector<BaseMorphism> components) const {
      if (alpha.source() != source.size() || alpha.target() != target.size()) {
        throw ShapeError("pointed map " + alpha.to_string()
                         + " does not lie between tuples of length "
                         + std::to_string(source.size()) + " and "
                         + std::to_string(target.size()));
      }
      if (components.size() != target.size()) {
        throw ShapeError("expected " + std::to_string(target.size())
                         + " components, got "
                         + std::to_string(components.size()));
      }
      for (std::size_t j = 1; j <= target.size(); ++j) {
        auto const& f = components[j - 1];
        if (!(_base.domain(f) == preimage_tensor(source, alpha, j))
            || !(_base.codomain(f) == target[j - 1])) {
          throw ShapeError("component " + std::to_string(j)
                           + " has the wrong domain or codomain: "
                           + _base.to_json(f).dump());
        }
      }
      return {std::move(source), std::move(target), std::move(alpha),
              std::move(components)};
    }

    [[nodiscard]] Morphism identity(Object const& x) const {
      std::vector<BaseMorphism> comps;
      comps.reserve(x.size());
      for (auto const& a : x) {
        comps.push_back(_base.identity(a));
      }
      return {x, x, PointedMap::identity(x.size()), std::move(comps)};
    }

    [[nodiscard]] Object domain(Morphism const& f) const {
      return f.source;
    }
    [[nodiscard]] Object codomain(Morphism const& f) const {
      return f.target;
    }

    [[nodiscard]] bool equal(Morphism const& f, Morphism const& g) const {
      if (!(f.source == g.source) || !(f.target == g.target) || !(f.map == g.map)) {
        return false;
      }
      for (std::size_t j = 0; j < f.components.size(); ++j) {
        if (!_base.equal(f.components[j], g.components[j])) {
          return false;
        }
      }
      return true;
    }

    // outer ∘ inner. Component k is
    //   g_k ∘ (⊗_{j∈β⁻¹(k)} f_j) ∘ P_k
    // where P_k reorders ⊗_{i∈(βα)⁻¹(k)} A_i from increasing order into the
    // order of the blocks α⁻¹(j), j∈β⁻¹(k).
    [[nodiscard]] Morphism compose(Morphism const& outer, Morphism const& inner) const {
      if (!(inner.target == outer.source)) {
        throw CompositionError("operator morphisms not composable: "
                               + render(outer) + " ∘ " + render(inner));
      }
      PointedMap const          gamma = catcheck::compose(outer.map, inner.map);
      std::vector<BaseMorphism> comps;
      comps.reserve(gamma.target());
      for (std::size_t k = 1; k <= gamma.target(); ++k) {
        std::vector<std::size_t>  blocks;
        std::vector<BaseMorphism> fs;
        for (auto j : outer.map.preimage(k)) {
          for (auto i : inner.map.preimage(j)) {
            blocks.push_back(i);
          }
          fs.push_back(inner.components[j - 1]);
        }
        auto middle = tensor_all(_base, std::span<BaseMorphism const>(fs));
        auto h      = _base.compose(outer.components[k - 1], middle);
        if (!std::is_sorted(blocks.begin(), blocks.end())) {
          h = _base.compose(h, shuffle_to_blocks(inner.source, blocks));
        }
        comps.push_back(std::move(h));
      }
      return {inner.source, outer.target, gamma, std::move(comps)};
    }

    // α_!(x) = (⊗_{i∈α⁻¹(j)} x_i)_j; an empty preimage gives the unit.
    [[nodiscard]] Object pushforward(PointedMap const& alpha, Object const& x) const {
      require_over(alpha, x);
      Object out;
      out.reserve(alpha.target());
      for (std::size_t j = 1; j <= alpha.target(); ++j) {
        out.push_back(preimage_tensor(x, alpha, j));
      }
      return out;
    }

    // ᾱ : x → α_!(x), every component an identity.
    [[nodiscard]] Morphism cocartesian_lift(PointedMap const& alpha, Object const& x) const {
      Object                    y = pushforward(alpha, x);
      std::vector<BaseMorphism> comps;
      comps.reserve(y.size());
      for (auto const& b : y) {
        comps.push_back(_base.identity(b));
      }
      return {x, std::move(y), alpha, std::move(comps)};
    }

    // Given g : x → z over β∘α, the unique h : α_!(x) → z over β with
    // h ∘ ᾱ = g. Component k is g_k ∘ P_k⁻¹.
    [[nodiscard]] Morphism factor_through_lift(Morphism const&   g,
                                               PointedMap const& alpha,
                                               PointedMap const& beta) const {
      if (!(g.map == catcheck::compose(beta, alpha))) {
        throw PreconditionError("morphism over " + g.map.to_string()
                                + " does not lie over β∘α");
      }
      Object                    y = pushforward(alpha, g.source);
      std::vector<BaseMorphism> comps;
      comps.reserve(beta.target());
      for (std::size_t k = 1; k <= beta.target(); ++k) {
        std::vector<std::size_t> blocks;
        for (auto j : beta.preimage(k)) {
          for (auto i : alpha.preimage(j)) {
            blocks.push_back(i);
          }
        }
        auto h = g.components[k - 1];
        if (!std::is_sorted(blocks.begin(), blocks.end())) {
          h = _base.compose(h, shuffle_from_blocks(g.source, blocks));
        }
        comps.push_back(std::move(h));
      }
      return {std::move(y), g.target, beta, std::move(comps)};
    }

    // The functor α_! on a morphism f : x → y over the identity, obtained
    // by factoring lift(α, y) ∘ f through lift(α, x).
    [[nodiscard]] Morphism pushforward(PointedMap const& alpha, Morphism const& f) const {
      if (!(f.map == PointedMap::identity(f.source.size()))) {
        throw PreconditionError("pushforward expects a morphism over an identity, got "
                                + f.map.to_string());
      }
      auto const over = compose(cocartesian_lift(alpha, f.target), f);
      return factor_through_lift(over, alpha, PointedMap::identity(alpha.target()));
    }

    // Morphisms x → y over α, in lexicographic order of the component
    // choices.
    [[nodiscard]] std::uint64_t hom_size_over(Object const&     x,
                                              Object const&     y,
                                              PointedMap const& alpha) const
      requires FiniteHomCategory<C>
    {
      require_over(alpha, x, y);
      std::uint64_t total = 1;
      for (std::size_t j = 1; j <= y.size(); ++j) {
        auto const s = _base.hom_size(preimage_tensor(x, alpha, j), y[j - 1]);
        if (s == 0) {
          return 0;
        }
        if (total > std::numeric_limits<std::uint64_t>::max() / s) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        total *= s;
      }
      return total;
    }

    void for_each_hom_over(Object const&                         x,
                           Object const&                         y,
                           PointedMap const&                     alpha,
                           std::function<void(Morphism const&)> const& fn) const
      requires FiniteHomCategory<C>
    {
      require_over(alpha, x, y);
      std::vector<std::vector<BaseMorphism>> choices;
      for (std::size_t j = 1; j <= y.size(); ++j) {
        choices.push_back(_base.enumerate_hom(preimage_tensor(x, alpha, j), y[j - 1]));
        if (choices.back().empty()) {
          return;
        }
      }
      std::vector<std::size_t> digit(choices.size(), 0);
      Morphism                 m{x, y, alpha, {}};
      while (true) {
        m.components.clear();
        for (std::size_t j = 0; j < choices.size(); ++j) {
          m.components.push_back(choices[j][digit[j]]);
        }
        fn(m);
        std::size_t c = choices.size();
        while (true) {
          if (c == 0) {
            return;
          }
          --c;
          if (++digit[c] < choices[c].size()) {
            break;
          }
          digit[c] = 0;
        }
      }
    }

    [[nodiscard]] std::vector<Morphism> enumerate_hom_over(Object const&     x,
                                                           Object const&     y,
                                                           PointedMap const& alpha) const
      requires FiniteHomCategory<C>
    {
      std::vector<Morphism> out;
      for_each_hom_over(x, y, alpha, [&](Morphism const& m) { out.push_back(m); });
      return out;
    }

    [[nodiscard]] std::vector<Morphism> enumerate_hom(Object const& x,
                                                      Object const& y) const
      requires FiniteHomCategory<C>
    {
      std::vector<Morphism> out;
      for (auto const& alpha : enumerate_pointed_maps(x.size(), y.size())) {
        for_each_hom_over(x, y, alpha, [&](Morphism const& m) { out.push_back(m); });
      }
      return out;
    }

    // Precomposition with ᾱ, Hom_β(α_!x, z) → Hom_{βα}(x, z), is a
    // bijection: injective on the enumerated domain, the two sides have the
    // same size, and factor_through_lift inverts it. Hom-sets larger than
    // `budget` are skipped.
    [[nodiscard]] CheckReport check_cocartesian(PointedMap const& alpha,
                                                Object const&     x,
                                                PointedMap const& beta,
                                                Object const&     z,
                                                std::uint64_t     budget = 1u << 16) const
      requires FiniteHomCategory<C>
    {
      CheckReport      report;
      std::string const name = "cocartesian " + alpha.to_string() + " then " + beta.to_string();
      auto const lift   = cocartesian_lift(alpha, x);
      auto const gamma  = catcheck::compose(beta, alpha);
      auto const n_from = hom_size_over(lift.target, z, beta);
      auto const n_to   = hom_size_over(x, z, gamma);
      if (n_from > budget || n_to > budget) {
        if constexpr (std::is_same_v<BaseMorphism, Matrix>) {
          report.merge(check_cocartesian_linear(name, lift, alpha, beta, z));
        } else {
          report.skip(name, "hom-set exceeds enumeration budget");
        }
        return report;
      }
      if (n_from != n_to) {
        report.fail(name, "hom-set sizes differ",
                    {{"over_beta", n_from}, {"over_composite", n_to}});
        return report;
      }
      std::set<std::string> images;
      bool                  ok = true;
      for_each_hom_over(lift.target, z, beta, [&](Morphism const& h) {
        if (!ok) {
          return;
        }
        auto const g = compose(h, lift);
        if (!images.insert(key(g)).second) {
          ok = false;
          report.fail(name, "two morphisms over β have the same composite",
                      {{"composite", to_json(g)}});
          return;
        }
        if (!equal(factor_through_lift(g, alpha, beta), h)) {
          ok = false;
          report.fail(name, "factoring the composite does not recover h",
                      {{"h", to_json(h)}});
        }
      });
      if (ok) {
        report.pass(name, std::to_string(n_from) + " morphisms");
      }
      return report;
    }

    // The Segal comparison on the fiber over [n]_+: tuples of length n
    // drawn from `population` map to their n restrictions along ρ^i_!,
    // and on each hom-set of the fiber the maps ρ^i_! are jointly injective
    // with image size equal to ∏_i |C(x_i, y_i)|.
    [[nodiscard]] CheckReport segal_check(std::size_t                   n,
                                          std::span<BaseObject const>   population,
                                          std::uint64_t budget = 1u << 16) const
      requires FiniteHomCategory<C>
    {
      CheckReport         report;
      std::vector<Object> tuples;
      {
        std::vector<std::size_t> digit(n, 0);
        if (!population.empty() || n == 0) {
          while (true) {
            Object t;
            for (auto d : digit) {
              t.push_back(population[d]);
            }
            tuples.push_back(std::move(t));
            std::size_t c = n;
            bool        done = true;
            while (c > 0) {
              --c;
              if (++digit[c] < population.size()) {
                done = false;
                break;
              }
              digit[c] = 0;
            }
            if (done) {
              break;
            }
          }
        }
      }
      std::vector<PointedMap> rho;
      for (std::size_t i = 1; i <= n; ++i) {
        rho.push_back(PointedMap::collapse_to(n, i));
      }

      // Objects: the restriction tuple must be the tuple itself, entrywise.
      std::set<std::string> object_images;
      bool                  objects_ok = true;
      for (auto const& x : tuples) {
        nlohmann::json image = nlohmann::json::array();
        for (std::size_t i = 0; i < n; ++i) {
          auto const r = pushforward(rho[i], x);
          if (r.size() != 1 || !(r[0] == x[i])) {
            objects_ok = false;
          }
          image.push_back(_base.object_json(r.at(0)));
        }
        if (!object_images.insert(image.dump()).second) {
          objects_ok = false;
        }
        if (!objects_ok) {
          report.fail("segal objects n=" + std::to_string(n),
                      "restriction is not a bijection onto the product",
                      {{"tuple", object_json(x)}});
          break;
        }
      }
      std::size_t expected_objects = 1;
      for (std::size_t i = 0; i < n; ++i) {
        expected_objects *= population.size();
      }
      if (objects_ok) {
        report.expect(object_images.size() == expected_objects,
                      "segal objects n=" + std::to_string(n),
                      std::to_string(object_images.size()) + " tuples");
      }

      std::uint64_t pairs   = 0;
      std::uint64_t checked = 0;
      std::uint64_t skipped = 0;
      bool          homs_ok = true;
      auto const    id_n    = PointedMap::identity(n);
      auto const    id_1    = PointedMap::identity(1);
      for (auto const& x : tuples) {
        for (auto const& y : tuples) {
          if (!homs_ok) {
            break;
          }
          ++pairs;
          std::uint64_t product = 1;
          for (std::size_t i = 0; i < n; ++i) {
            product *= _base.hom_size(x[i], y[i]);
          }
          if (hom_size_over(x, y, id_n) > budget) {
            ++skipped;
            continue;
          }
          std::set<std::string> images;
          for_each_hom_over(x, y, id_n, [&](Morphism const& f) {
            if (!homs_ok) {
              return;
            }
            std::string k;
            for (std::size_t i = 0; i < n; ++i) {
              auto const over = compose(cocartesian_lift(rho[i], y), f);
              auto const r    = factor_through_lift(over, rho[i], id_1);
              k += key(r) + ";";
            }
            ++checked;
            if (!images.insert(k).second) {
              homs_ok = false;
              report.fail("segal homs n=" + std::to_string(n),
                          "two fiber morphisms have the same restrictions",
                          {{"morphism", to_json(f)}});
            }
          });
          if (homs_ok && images.size() != product) {
            homs_ok = false;
            report.fail("segal homs n=" + std::to_string(n),
                        "fiber hom-set size differs from the product of base hom-sets",
                        {{"source", object_json(x)},
                         {"target", object_json(y)},
                         {"fiber", images.size()},
                         {"product", product}});
          }
        }
      }
      if (homs_ok) {
        report.pass("segal homs n=" + std::to_string(n),
                    std::to_string(pairs - skipped) + " hom-sets, "
                        + std::to_string(checked) + " morphisms"
                        + (skipped ? ", " + std::to_string(skipped) + " over budget"
                                   : std::string()));
      }
      return report;
    }

    [[nodiscard]] nlohmann::json object_json(Object const& x) const {
      nlohmann::json out = nlohmann::json::array();
      for (auto const& a : x) {
        out.push_back(_base.object_json(a));
      }
      return out;
    }

    [[nodiscard]] nlohmann::json to_json(Morphism const& f) const {
      nlohmann::json comps = nlohmann::json::array();
      for (auto const& g : f.components) {
        comps.push_back(_base.to_json(g));
      }
      return {{"source", object_json(f.source)},
              {"target", object_json(f.target)},
              {"map", f.map.to_json()},
              {"components", comps}};
    }

    // (α-table, component list) on one line.
    [[nodiscard]] std::string render(Morphism const& f) const {
      std::string out = "(" + f.map.to_string() + ", [";
      for (std::size_t j = 0; j < f.components.size(); ++j) {
        out += (j ? ", " : "") + _base.to_json(f.components[j]).dump();
      }
      return out + "])";
    }

   private:
    C _base;

    // Above the enumeration budget on a matrix base: h ↦ h∘ᾱ is linear, so
    // it is bijective iff both hom-spaces have the same dimension and the
    // composites of a basis are independent. factor_through_lift is checked
    // on the basis too.
    [[nodiscard]] CheckReport check_cocartesian_linear(std::string const& name,
                                                       Morphism const&    lift,
                                                       PointedMap const&  alpha,
                                                       PointedMap const&  beta,
                                                       Object const&      z,
                                                       std::size_t        cap = 1u << 11) const {
      CheckReport report;
      auto const& y     = lift.target;
      auto const  gamma = catcheck::compose(beta, alpha);
      auto const& ring  = _base.ring();
      std::vector<Matrix> zeros;
      std::size_t         dim_from = 0, dim_to = 0;
      for (std::size_t j = 1; j <= z.size(); ++j) {
        zeros.emplace_back(ring, z[j - 1], preimage_tensor(y, beta, j));
        dim_from += z[j - 1] * preimage_tensor(y, beta, j);
        dim_to += z[j - 1] * preimage_tensor(lift.source, gamma, j);
      }
      if (dim_from != dim_to) {
        report.fail(name, "hom-space dimensions differ",
                    {{"over_beta", dim_from}, {"over_composite", dim_to}});
        return report;
      }
      if (dim_from > cap) {
        report.skip(name, "hom-space dimension exceeds the rank budget");
        return report;
      }
      Matrix      images(ring, dim_to, dim_from);
      std::size_t col = 0;
      for (std::size_t j = 0; j < zeros.size(); ++j) {
        for (std::size_t r = 0; r < zeros[j].rows(); ++r) {
          for (std::size_t c = 0; c < zeros[j].cols(); ++c, ++col) {
            auto comps = zeros;
            comps[j].set_int(r, c, 1);
            auto const h = make(y, z, beta, std::move(comps));
            auto const g = compose(h, lift);
            if (!equal(factor_through_lift(g, alpha, beta), h)) {
              report.fail(name, "factoring the composite does not recover h",
                          {{"h", to_json(h)}});
              return report;
            }
            std::size_t row = 0;
            for (auto const& m : g.components) {
              for (auto const& e : m.entries()) {
                images.set(row++, col, e);
              }
            }
          }
        }
      }
      if (images.rank() != dim_from) {
        report.fail(name, "composites of basis morphisms are linearly dependent",
                    {{"rank", images.rank()}, {"dimension", dim_from}});
        return report;
      }
      report.pass(name, "rank " + std::to_string(dim_from) + " of " + std::to_string(dim_from));
      return report;
    }

    [[nodiscard]] std::string key(Morphism const& f) const {
      return to_json(f).dump();
    }

    void require_over(PointedMap const& alpha, Object const& x) const {
      if (alpha.source() != x.size()) {
        throw ShapeError("tuple of length " + std::to_string(x.size())
                         + " does not lie over the source of " + alpha.to_string());
      }
    }
    void require_over(PointedMap const& alpha, Object const& x, Object const& y) const {
      require_over(alpha, x);
      if (alpha.target() != y.size()) {
        throw ShapeError("tuple of length " + std::to_string(y.size())
                         + " does not lie over the target of " + alpha.to_string());
      }
    }

    // ⊗ in increasing order → ⊗ in `blocks` order.
    [[nodiscard]] BaseMorphism shuffle_to_blocks(Object const&                   x,
                                                 std::vector<std::size_t> const& blocks) const {
      std::vector<std::size_t> increasing = blocks;
      std::sort(increasing.begin(), increasing.end());
      std::vector<BaseObject>  objects;
      std::vector<std::size_t> perm;
      for (auto i : increasing) {
        objects.push_back(x[i - 1]);
      }
      for (auto b : blocks) {
        perm.push_back(static_cast<std::size_t>(
            std::lower_bound(increasing.begin(), increasing.end(), b) - increasing.begin()));
      }
      return permute_factors(_base, std::span<BaseObject const>(objects),
                             std::span<std::size_t const>(perm));
    }

    // ⊗ in `blocks` order → ⊗ in increasing order.
    [[nodiscard]] BaseMorphism shuffle_from_blocks(Object const&                   x,
                                                   std::vector<std::size_t> const& blocks) const {
      std::vector<std::size_t> increasing = blocks;
      std::sort(increasing.begin(), increasing.end());
      std::vector<BaseObject>  objects;
      std::vector<std::size_t> perm;
      for (auto b : blocks) {
        objects.push_back(x[b - 1]);
      }
      for (auto i : increasing) {
        perm.push_back(static_cast<std::size_t>(
            std::find(blocks.begin(), blocks.end(), i) - blocks.begin()));
      }
      return permute_factors(_base, std::span<BaseObject const>(objects),
                             std::span<std::size_t const>(perm));
    }
  };

}  // namespace catcheck
