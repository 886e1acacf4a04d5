#include "catcheck/ring.hpp"

#include <limits>
#include <numeric>

#include "catcheck/error.hpp"

namespace catcheck {

  namespace {
    using i128 = __int128;

    std::int64_t narrow(i128 v) {
      if (v > std::numeric_limits<std::int64_t>::max()
          || v < std::numeric_limits<std::int64_t>::min()) {
        throw ArithmeticOverflow("rational arithmetic overflowed 64 bits");
      }
      return static_cast<std::int64_t>(v);
    }

    i128 gcd128(i128 a, i128 b) {
      if (a < 0) {
        a = -a;
      }
      if (b < 0) {
        b = -b;
      }
      while (b != 0) {
        i128 t = a % b;
        a      = b;
        b      = t;
      }
      return a;
    }

    Scalar reduce(i128 num, i128 den) {
      if (den == 0) {
        throw Error("division by zero");
      }
      if (den < 0) {
        num = -num;
        den = -den;
      }
      i128 g = gcd128(num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
      if (num == 0) {
        den = 1;
      }
      return {narrow(num), narrow(den)};
    }

    std::int64_t mod(i128 v, std::uint64_t p) {
      i128 r = v % static_cast<i128>(p);
      if (r < 0) {
        r += p;
      }
      return static_cast<std::int64_t>(r);
    }
  }  // namespace

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  Ring Ring::prime_field(std::uint64_t p) {
    if (!is_prime(p)) {
      throw Error("F_p requires a prime p, got " + std::to_string(p));
    }
    if (p > (std::uint64_t(1) << 31)) {
      throw BoundError("prime " + std::to_string(p)
                       + " exceeds the supported bound 2^31");
    }
    return Ring(p);
  }

  std::string Ring::name() const {
    return is_prime_field() ? "F_" + std::to_string(_p) : std::string("Q");
  }

  Scalar Ring::from_int(std::int64_t v) const {
    if (is_prime_field()) {
      return {mod(v, _p), 1};
    }
    return {v, 1};
  }

  Scalar Ring::from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) {
      throw Error("zero denominator");
    }
    if (is_prime_field()) {
      return mul(from_int(num), inv(from_int(den)));
    }
    return reduce(num, den);
  }

  Scalar Ring::add(Scalar a, Scalar b) const {
    if (is_prime_field()) {
      return {mod(i128(a.num) + b.num, _p), 1};
    }
    if (a.den == 1 && b.den == 1) {
      return {narrow(i128(a.num) + b.num), 1};
    }
    return reduce(i128(a.num) * b.den + i128(b.num) * a.den,
                  i128(a.den) * b.den);
  }

  Scalar Ring::sub(Scalar a, Scalar b) const {
    return add(a, neg(b));
  }

  Scalar Ring::mul(Scalar a, Scalar b) const {
    if (is_prime_field()) {
      return {mod(i128(a.num) * b.num, _p), 1};
    }
    if (a.num == 0 || b.num == 0) {
      return zero();
    }
    if (a.den == 1 && b.den == 1) {
      return {narrow(i128(a.num) * b.num), 1};
    }
    return reduce(i128(a.num) * b.num, i128(a.den) * b.den);
  }

  Scalar Ring::neg(Scalar a) const {
    if (is_prime_field()) {
      return {a.num == 0 ? 0 : static_cast<std::int64_t>(_p) - a.num, 1};
    }
    return {narrow(-i128(a.num)), a.den};
  }

  Scalar Ring::inv(Scalar a) const {
    if (a.num == 0) {
      throw Error("inverse of zero");
    }
    if (is_prime_field()) {
      // Fermat: a^(p-2).
      i128          result = 1;
      i128          base   = a.num;
      std::uint64_t e      = _p - 2;
      while (e > 0) {
        if (e & 1) {
          result = (result * base) % _p;
        }
        base = (base * base) % _p;
        e >>= 1;
      }
      return {static_cast<std::int64_t>(result), 1};
    }
    return reduce(a.den, a.num);
  }

  bool Ring::is_canonical(Scalar s) const noexcept {
    if (is_prime_field()) {
      return s.den == 1 && s.num >= 0
             && static_cast<std::uint64_t>(s.num) < _p;
    }
    if (s.den <= 0) {
      return false;
    }
    if (s.num == 0) {
      return s.den == 1;
    }
    return std::gcd(s.num, s.den) == 1;
  }

  std::string Ring::to_string(Scalar s) const {
    if (s.den == 1) {
      return std::to_string(s.num);
    }
    return std::to_string(s.num) + "/" + std::to_string(s.den);
  }

}  // namespace catcheck
