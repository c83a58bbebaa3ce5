#pragma once

#include <cstdint>
#include <string>

namespace mtc {

// Exact rational arithmetic for conformal weights and central charges.
// Always stored reduced with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

  // Representative in [0, 1).
  Rational mod1() const;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
};

}  // namespace mtc
