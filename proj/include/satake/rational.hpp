#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace satake {

using i64 = long long;

// Exact rational number, always stored reduced with den > 0.
// Denominators in this project divide phi(p^m) and coefficients stay
// small, so i64 components never get close to overflow.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  Rat operator-() const { return Rat(-num, den); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    i64 g = std::gcd(a.den, b.den);
    return Rat(a.num * (b.den / g) + b.num * (a.den / g), a.den * (b.den / g));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    i64 g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    i64 g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rat((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }
  friend Rat operator*(i64 k, const Rat& a) { return Rat(k) * a; }
  friend Rat operator*(const Rat& a, i64 k) { return Rat(k) * a; }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
    return a * Rat(b.den, b.num);
  }

  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num * b.den < b.num * a.den;
  }

  // Representative in [0,1); fraction-exact arithmetic mod Z.
  Rat mod1() const {
    i64 r = num % den;
    if (r < 0) r += den;
    return Rat(r, den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
Rat parse_fraction(const std::string& s);

}  // namespace satake
