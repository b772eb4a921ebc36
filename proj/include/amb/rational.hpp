#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace amb {

// Exact rational arithmetic, sized for digit-stream validation: residual
// chains double numerators against a fixed denominator, so magnitudes
// stay far below the 64-bit range at desk scale.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num < 0 ? Rational(-num, den) : *this; }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace amb
