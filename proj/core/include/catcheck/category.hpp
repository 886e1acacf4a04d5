#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcheck/error.hpp"
#include "catcheck/witness.hpp"

namespace catcheck {

  // A category whose objects and morphisms are finite values with
  // decidable morphism equality.
  template <typename C>
  concept ComputableCategory = requires(C const&                     c,
                                        typename C::Object const&   a,
                                        typename C::Morphism const& f) {
    { c.identity(a) } -> std::same_as<typename C::Morphism>;
    // compose(g, f) = g∘f
    { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
    { c.domain(f) } -> std::same_as<typename C::Object>;
    { c.codomain(f) } -> std::same_as<typename C::Object>;
    { c.equal(f, f) } -> std::same_as<bool>;
    { a == a } -> std::convertible_to<bool>;
  };

  // A strict symmetric monoidal structure on a computable category:
  // associators and unitors are identities, so (A⊗B)⊗C and A⊗(B⊗C) are the
  // same object and every diagram check is an equality check.
  template <typename C>
  concept SymmetricMonoidalCategory
      = ComputableCategory<C>
        && requires(C const&                     c,
                    typename C::Object const&   a,
                    typename C::Morphism const& f) {
             { c.unit() } -> std::same_as<typename C::Object>;
             { c.tensor(a, a) } -> std::same_as<typename C::Object>;
             { c.tensor(f, f) } -> std::same_as<typename C::Morphism>;
             { c.braiding(a, a) } -> std::same_as<typename C::Morphism>;
             {
               c.is_invertible(f)
             } -> std::same_as<Invertibility<typename C::Morphism>>;
             { c.to_json(f) } -> std::same_as<nlohmann::json>;
             { c.object_json(a) } -> std::same_as<nlohmann::json>;
           };

  // Hom-sets that can be listed. hom_size saturates at UINT64_MAX.
  template <typename C>
  concept FiniteHomCategory
      = ComputableCategory<C>
        && requires(C const& c, typename C::Object const& a) {
             { c.hom_size(a, a) } -> std::same_as<std::uint64_t>;
             {
               c.enumerate_hom(a, a)
             } -> std::same_as<std::vector<typename C::Morphism>>;
           };

  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Object
  tensor_all(C const& c, std::span<typename C::Object const> objects) {
    typename C::Object out = c.unit();
    for (auto const& a : objects) {
      out = c.tensor(out, a);
    }
    return out;
  }

  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Morphism
  tensor_all(C const& c, std::span<typename C::Morphism const> morphisms) {
    if (morphisms.empty()) {
      return c.identity(c.unit());
    }
    typename C::Morphism out = morphisms.front();
    for (std::size_t i = 1; i < morphisms.size(); ++i) {
      out = c.tensor(out, morphisms[i]);
    }
    return out;
  }

  // X^{⊗n}, with X^{⊗0} the unit.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Object
  tensor_power(C const& c, typename C::Object const& x, std::size_t n) {
    typename C::Object out = c.unit();
    for (std::size_t i = 0; i < n; ++i) {
      out = c.tensor(out, x);
    }
    return out;
  }

  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Morphism
  tensor_power(C const& c, typename C::Morphism const& f, std::size_t n) {
    std::vector<typename C::Morphism> fs(n, f);
    return tensor_all(c, std::span<typename C::Morphism const>(fs));
  }

  namespace detail {
    inline void check_permutation(std::span<std::size_t const> perm,
                                  std::size_t                  n) {
      if (perm.size() != n) {
        throw ShapeError("permutation of length "
                         + std::to_string(perm.size()) + " for "
                         + std::to_string(n) + " factors");
      }
      std::vector<bool> seen(n, false);
      for (auto p : perm) {
        if (p >= n || seen[p]) {
          throw ShapeError("not a permutation");
        }
        seen[p] = true;
      }
    }
  }  // namespace detail

  // The symmetry isomorphism
  //   ⊗_i objects[i]  →  ⊗_t objects[perm[t]]
  // assembled from adjacent braidings id⊗σ⊗id only. This is the reference
  // construction; instances may provide a direct permute_factors member.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Morphism
  permute_factors_by_braiding(C const&                            c,
                              std::span<typename C::Object const> objects,
                              std::span<std::size_t const>        perm) {
    using Object   = typename C::Object;
    std::size_t const n = objects.size();
    detail::check_permutation(perm, n);
    std::vector<std::size_t> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    auto current_objects = [&] {
      std::vector<Object> out;
      for (auto i : cur) {
        out.push_back(objects[i]);
      }
      return out;
    };
    auto result = c.identity(tensor_all(c, std::span<Object const>(objects)));
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t q = static_cast<std::size_t>(
          std::find(cur.begin(), cur.end(), perm[t]) - cur.begin());
      while (q > t) {
        auto const               obs = current_objects();
        std::span<Object const>  all(obs);
        auto left  = c.identity(tensor_all(c, all.subspan(0, q - 1)));
        auto mid   = c.braiding(obs[q - 1], obs[q]);
        auto right = c.identity(tensor_all(c, all.subspan(q + 1)));
        result     = c.compose(c.tensor(c.tensor(left, mid), right), result);
        std::swap(cur[q - 1], cur[q]);
        --q;
      }
    }
    return result;
  }

  template <typename C>
  concept HasDirectPermutation
      = requires(C const&                            c,
                 std::span<typename C::Object const> objects,
                 std::span<std::size_t const>        perm) {
          { c.permute_factors(objects, perm) } -> std::same_as<typename C::Morphism>;
        };

  // Same contract as permute_factors_by_braiding, using the instance's
  // direct construction when it has one.
  template <SymmetricMonoidalCategory C>
  [[nodiscard]] typename C::Morphism
  permute_factors(C const&                            c,
                  std::span<typename C::Object const> objects,
                  std::span<std::size_t const>        perm) {
    if constexpr (HasDirectPermutation<C>) {
      detail::check_permutation(perm, objects.size());
      return c.permute_factors(objects, perm);
    } else {
      return permute_factors_by_braiding(c, objects, perm);
    }
  }

}  // namespace catcheck
