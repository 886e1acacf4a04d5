#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace catcheck {

  // An exact scalar. Over F_p the value is num in [0, p) and den == 1;
  // over Q it is a reduced fraction with den > 0. A Scalar carries no ring
  // of its own: every arithmetic operation goes through a Ring.
  struct Scalar {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend constexpr bool operator==(Scalar const&, Scalar const&) = default;
    friend constexpr auto operator<=>(Scalar const&, Scalar const&)
        = default;
  };

  // The scalar ring of a matrix instance: a prime field F_p or the
  // rationals. Rational arithmetic is carried out in 64-bit integers with
  // 128-bit intermediates and throws ArithmeticOverflow rather than wrap.
  class Ring {
   public:
    // Throws Error if p is not prime (checked by trial division).
    static Ring prime_field(std::uint64_t p);
    static Ring rationals() noexcept {
      return Ring(0);
    }

    [[nodiscard]] bool is_prime_field() const noexcept {
      return _p != 0;
    }
    // p for F_p, 0 for Q.
    [[nodiscard]] std::uint64_t characteristic() const noexcept {
      return _p;
    }
    [[nodiscard]] std::string name() const;

    [[nodiscard]] Scalar zero() const noexcept {
      return {0, 1};
    }
    [[nodiscard]] Scalar one() const noexcept {
      return {1, 1};
    }
    [[nodiscard]] Scalar from_int(std::int64_t v) const;
    [[nodiscard]] Scalar from_fraction(std::int64_t num,
                                       std::int64_t den) const;

    [[nodiscard]] Scalar add(Scalar a, Scalar b) const;
    [[nodiscard]] Scalar sub(Scalar a, Scalar b) const;
    [[nodiscard]] Scalar mul(Scalar a, Scalar b) const;
    [[nodiscard]] Scalar neg(Scalar a) const;
    // Throws Error on zero.
    [[nodiscard]] Scalar inv(Scalar a) const;
    [[nodiscard]] bool is_zero(Scalar a) const noexcept {
      return a.num == 0;
    }
    // Whether s is in the canonical form for this ring.
    [[nodiscard]] bool is_canonical(Scalar s) const noexcept;

    [[nodiscard]] std::string to_string(Scalar s) const;

    friend bool operator==(Ring const&, Ring const&) = default;

   private:
    explicit Ring(std::uint64_t p) noexcept : _p(p) {}
    std::uint64_t _p;
  };

  [[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

}  // namespace catcheck
