#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ncflow {

// Exact rational on int64 with 128-bit intermediates. The coefficient
// growth in this project is tame (prefactors, symmetry factors, small
// combinatorial counts), so a fixed-width numerator/denominator with an
// overflow trap beats a bignum here.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  Rational inverse() const { return Rational(1) / *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = make(num_, den_); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ncflow
