#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace catcheck {

  // A basepoint-preserving map [m]_+ → [n]_+ between the skeletal pointed
  // sets [m]_+ = {1, ..., m, *}. Points are numbered 1..m and the basepoint
  // is encoded as 0, so the map is a table of m values in {0, ..., n}.
  class PointedMap {
   public:
    static constexpr std::size_t basepoint = 0;

    // table[i - 1] is the image of point i. Throws Error on values > n.
    PointedMap(std::size_t source, std::size_t target, std::vector<std::size_t> table);

    static PointedMap identity(std::size_t n);
    // [n]_+ → [1]_+ sending every point to 1.
    static PointedMap fold(std::size_t n);
    // ρ^i : [n]_+ → [1]_+ keeping i and sending every other point to *.
    static PointedMap collapse_to(std::size_t n, std::size_t i);
    // The unique map [0]_+ → [n]_+.
    static PointedMap from_empty(std::size_t n);

    [[nodiscard]] std::size_t source() const noexcept {
      return _source;
    }
    [[nodiscard]] std::size_t target() const noexcept {
      return _target;
    }
    // Image of point i in 0..m (0 is the basepoint).
    [[nodiscard]] std::size_t operator()(std::size_t i) const {
      return i == basepoint ? basepoint : _table.at(i - 1);
    }
    [[nodiscard]] std::vector<std::size_t> const& table() const noexcept {
      return _table;
    }

    // Non-basepoint points of the source sent to j, in increasing order.
    // preimage(0) lists the points collapsed to the basepoint.
    [[nodiscard]] std::vector<std::size_t> preimage(std::size_t j) const;

    // Every j in 1..n has exactly one preimage.
    [[nodiscard]] bool is_inert() const;
    // Only the basepoint maps to the basepoint.
    [[nodiscard]] bool is_active() const;

    [[nodiscard]] std::string    to_string() const;
    [[nodiscard]] nlohmann::json to_json() const;

    friend bool operator==(PointedMap const&, PointedMap const&) = default;
    friend auto operator<=>(PointedMap const&, PointedMap const&) = default;

   private:
    std::size_t              _source;
    std::size_t              _target;
    std::vector<std::size_t> _table;
  };

  // outer ∘ inner. Throws CompositionError if inner.target() != outer.source().
  [[nodiscard]] PointedMap compose(PointedMap const& outer, PointedMap const& inner);

  // All (n+1)^m maps [m]_+ → [n]_+ in lexicographic order of their tables.
  [[nodiscard]] std::vector<PointedMap> enumerate_pointed_maps(std::size_t m,
                                                               std::size_t n);
  // |Hom([m]_+, [n]_+)| computed by enumeration.
  [[nodiscard]] std::uint64_t count_pointed_maps(std::size_t m, std::size_t n);
  // The closed form (n+1)^m.
  [[nodiscard]] std::uint64_t pointed_map_count_formula(std::size_t m,
                                                        std::size_t n);

  struct InertActiveFactorization {
    PointedMap inert;
    PointedMap active;
  };

  // α = active ∘ inert. The middle object is [k]_+ where k is the number of
  // points not sent to the basepoint, numbered in increasing order; the
  // inert part collapses exactly α^{-1}(*).
  [[nodiscard]] InertActiveFactorization inert_active_factorize(PointedMap const& alpha);

}  // namespace catcheck
