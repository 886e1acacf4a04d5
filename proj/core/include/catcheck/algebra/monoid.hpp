#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace catcheck {

  // A finite monoid on {0..n-1} given by its table, table[a][b] = a·b.
  class Monoid {
   public:
    // Throws Error unless the table is square, associative and unital.
    static Monoid from_table(std::vector<std::vector<std::size_t>> table,
                             std::vector<std::string>              labels = {});
    static Monoid cyclic(std::size_t n);
    static Monoid symmetric_group(std::size_t n);
    // {e, x} with x·x = x.
    static Monoid idempotent();
    // {0, 1, ..., n-1} under a+b truncated at n-1.
    static Monoid truncated_naturals(std::size_t n);

    [[nodiscard]] std::size_t order() const noexcept {
      return _table.size();
    }
    [[nodiscard]] std::size_t unit() const noexcept {
      return _unit;
    }
    [[nodiscard]] std::size_t operator()(std::size_t a, std::size_t b) const {
      return _table[a][b];
    }
    [[nodiscard]] std::vector<std::vector<std::size_t>> const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    [[nodiscard]] std::optional<std::size_t> inverse(std::size_t a) const;
    [[nodiscard]] bool                       is_group() const;
    // The inversion table, or nullopt when some element has no inverse.
    [[nodiscard]] std::optional<std::vector<std::size_t>> inversion() const;

    // The table relabelled so that its isomorphism class has one
    // representative: lexicographically least over all relabellings.
    [[nodiscard]] std::vector<std::vector<std::size_t>> canonical_table() const;

    [[nodiscard]] nlohmann::json to_json() const;

   private:
    Monoid(std::vector<std::vector<std::size_t>> table,
           std::vector<std::string>              labels,
           std::size_t                           unit)
        : _table(std::move(table)), _labels(std::move(labels)), _unit(unit) {}

    std::vector<std::vector<std::size_t>> _table;
    std::vector<std::string>              _labels;
    std::size_t                           _unit;
  };

  // One representative per isomorphism class of monoids of order n, found by
  // brute force over tables with unit 0. Practical for n ≤ 4.
  [[nodiscard]] std::vector<Monoid> monoids_up_to_isomorphism(std::size_t n);

}  // namespace catcheck
