#ifndef FPM_RATIONAL_HPP
#define FPM_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "fpm/errors.hpp"

namespace fpm {

/// Exact rational scalar on int64 with overflow-checked arithmetic.
/// Backs the exact mode of the combinatorial identity tests; Gamma-valued
/// quantities never enter this type. Throws on overflow rather than wrap.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                    checked(i128(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep the products small.
    const long long g1 = std::gcd(a.num_, b.den_);
    const long long g2 = std::gcd(b.num_, a.den_);
    return Rational(checked(i128(a.num_ / g1) * (b.num_ / g2)),
                    checked(i128(a.den_ / g2) * (b.den_ / g1)));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("Rational: division by zero");
    Rational inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return a * inv;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  double to_double() const { return double(num_) / double(den_); }
  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using i128 = __int128;

  static long long checked(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
      throw Error("Rational: int64 overflow");
    }
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace fpm

#endif
