#pragma once

#include <compare>
#include <numeric>
#include <ostream>

#include "sgfr/semigroup.hpp"

namespace sgfr {

// Exact fraction with positive denominator, always in lowest terms.
struct Rational {
  Int num = 0;
  Int den = 1;

  constexpr Rational() = default;
  constexpr Rational(Int n, Int d = 1) : num(n), den(d) {  // NOLINT
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const Int g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  constexpr Int ceil() const noexcept {
    return num >= 0 ? (num + den - 1) / den : -((-num) / den);
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) noexcept {
    return a.num * b.den <=> b.num * a.den;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num;
    if (r.den != 1) os << '/' << r.den;
    return os;
  }
};

// ceil(a / b) for b > 0.
constexpr Int ceil_div(Int a, Int b) noexcept {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace sgfr
