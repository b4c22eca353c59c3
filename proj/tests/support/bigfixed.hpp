#ifndef FPM_TESTS_BIGFIXED_HPP
#define FPM_TESTS_BIGFIXED_HPP

// Minimal fixed-point big number for test oracles: ~234 decimal digits of
// fraction, little-endian base-1e9 limbs. Supports exactly the operations
// the extended-precision series oracles need; independent of the library
// code it checks.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace testsupport {

struct BigFixed {
  static constexpr int kFracLimbs = 26;  // 234 fractional digits
  static constexpr int kLimbs = kFracLimbs + 2;
  static constexpr std::uint32_t kBase = 1000000000u;

  int sign = 0;  // -1, 0, +1
  std::array<std::uint32_t, kLimbs> limb{};

  static BigFixed from_uint(std::uint64_t v) {
    BigFixed x;
    int i = kFracLimbs;
    while (v != 0) {
      x.limb[i++] = static_cast<std::uint32_t>(v % kBase);
      v /= kBase;
    }
    x.sign = is_zero_mag(x) ? 0 : 1;
    return x;
  }

  static BigFixed from_decimal(const std::string& s) {
    // Integer digits accumulate upward; fractional digits are folded in
    // backwards as (x + d)/10 so nothing ever overflows the integer limbs.
    std::string int_part, frac_part;
    bool neg = false, in_frac = false;
    for (char c : s) {
      if (c == '-') {
        neg = true;
      } else if (c == '.') {
        in_frac = true;
      } else if (c >= '0' && c <= '9') {
        (in_frac ? frac_part : int_part).push_back(c);
      } else if (c == ' ' || c == '\'') {
        // digit grouping
      } else {
        throw std::runtime_error("BigFixed: bad decimal");
      }
    }
    BigFixed frac;
    for (auto it = frac_part.rbegin(); it != frac_part.rend(); ++it) {
      frac = frac.add_small(static_cast<std::uint32_t>(*it - '0')).div_small(10);
    }
    frac.sign = is_zero_mag(frac) ? 0 : 1;
    BigFixed integer;
    for (char c : int_part) {
      integer = integer.mul_small(10).add_small(static_cast<std::uint32_t>(c - '0'));
      integer.sign = is_zero_mag(integer) ? 0 : 1;
    }
    BigFixed x = integer + frac;
    if (neg && x.sign != 0) x.sign = -x.sign;
    return x;
  }

  double to_double() const {
    double acc = 0.0;
    for (int i = kLimbs - 1; i >= 0; --i) acc = acc * 1e9 + double(limb[i]);
    for (int i = 0; i < kFracLimbs; ++i) acc /= 1e9;
    return sign < 0 ? -acc : acc;
  }

  static bool is_zero_mag(const BigFixed& x) {
    for (auto l : x.limb) {
      if (l != 0) return false;
    }
    return true;
  }

  BigFixed neg() const {
    BigFixed r = *this;
    r.sign = -r.sign;
    return r;
  }

  BigFixed add_small(std::uint32_t v) const {  // magnitude op, sign kept
    BigFixed r = *this;
    std::uint64_t carry = v;
    for (int i = kFracLimbs; i < kLimbs && carry; ++i) {
      carry += r.limb[i];
      r.limb[i] = static_cast<std::uint32_t>(carry % kBase);
      carry /= kBase;
    }
    if (r.sign == 0 && !is_zero_mag(r)) r.sign = 1;
    return r;
  }

  BigFixed mul_small(std::uint64_t v) const {
    BigFixed r;
    r.sign = (v == 0) ? 0 : sign;
    std::uint64_t carry = 0;
    for (int i = 0; i < kLimbs; ++i) {
      const std::uint64_t cur = std::uint64_t(limb[i]) * v + carry;
      r.limb[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    if (carry != 0) throw std::runtime_error("BigFixed: overflow");
    if (is_zero_mag(r)) r.sign = 0;
    return r;
  }

  BigFixed div_small(std::uint64_t v) const {
    if (v == 0) throw std::runtime_error("BigFixed: division by zero");
    BigFixed r;
    r.sign = sign;
    std::uint64_t rem = 0;
    for (int i = kLimbs - 1; i >= 0; --i) {
      const std::uint64_t cur = rem * kBase + limb[i];
      r.limb[i] = static_cast<std::uint32_t>(cur / v);
      rem = cur % v;
    }
    if (is_zero_mag(r)) r.sign = 0;
    return r;
  }

  static int cmp_mag(const BigFixed& a, const BigFixed& b) {
    for (int i = kLimbs - 1; i >= 0; --i) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i] ? -1 : 1;
    }
    return 0;
  }

  static BigFixed add_mag(const BigFixed& a, const BigFixed& b) {
    BigFixed r;
    std::uint64_t carry = 0;
    for (int i = 0; i < kLimbs; ++i) {
      const std::uint64_t cur = std::uint64_t(a.limb[i]) + b.limb[i] + carry;
      r.limb[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    if (carry != 0) throw std::runtime_error("BigFixed: overflow");
    return r;
  }

  static BigFixed sub_mag(const BigFixed& a, const BigFixed& b) {  // |a| >= |b|
    BigFixed r;
    std::int64_t borrow = 0;
    for (int i = 0; i < kLimbs; ++i) {
      std::int64_t cur = std::int64_t(a.limb[i]) - b.limb[i] - borrow;
      if (cur < 0) {
        cur += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r.limb[i] = static_cast<std::uint32_t>(cur);
    }
    return r;
  }

  friend BigFixed operator+(const BigFixed& a, const BigFixed& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    BigFixed r;
    if (a.sign == b.sign) {
      r = add_mag(a, b);
      r.sign = a.sign;
    } else {
      const int c = cmp_mag(a, b);
      if (c == 0) return BigFixed{};
      r = (c > 0) ? sub_mag(a, b) : sub_mag(b, a);
      r.sign = (c > 0) ? a.sign : b.sign;
    }
    if (is_zero_mag(r)) r.sign = 0;
    return r;
  }
  friend BigFixed operator-(const BigFixed& a, const BigFixed& b) { return a + b.neg(); }

  friend BigFixed operator*(const BigFixed& a, const BigFixed& b) {
    // Full product, then shift down by kFracLimbs (truncation toward zero;
    // sub-ulp at 234 digits, far below every oracle tolerance).
    std::array<std::uint64_t, 2 * kLimbs> acc{};
    for (int i = 0; i < kLimbs; ++i) {
      if (a.limb[i] == 0) continue;
      std::uint64_t carry = 0;
      for (int j = 0; j < kLimbs; ++j) {
        const std::uint64_t cur =
            acc[i + j] + std::uint64_t(a.limb[i]) * b.limb[j] + carry;
        acc[i + j] = cur % kBase;
        carry = cur / kBase;
      }
      int t = i + kLimbs;
      while (carry) {
        const std::uint64_t cur = acc[t] + carry;
        acc[t] = cur % kBase;
        carry = cur / kBase;
        ++t;
      }
    }
    BigFixed r;
    for (int i = 0; i < kLimbs; ++i) r.limb[i] = static_cast<std::uint32_t>(acc[i + kFracLimbs]);
    for (int i = kLimbs + kFracLimbs; i < 2 * kLimbs; ++i) {
      if (acc[i] != 0) throw std::runtime_error("BigFixed: overflow in product");
    }
    r.sign = a.sign * b.sign;
    if (is_zero_mag(r)) r.sign = 0;
    return r;
  }

  double abs_double() const {
    const double d = to_double();
    return d < 0 ? -d : d;
  }
};

/// pi to 240 decimal digits.
inline const BigFixed& big_pi() {
  static const BigFixed pi = BigFixed::from_decimal(
      "3."
      "14159265358979323846264338327950288419716939937510"
      "58209749445923078164062862089986280348253421170679"
      "82148086513282306647093844609550582231725359408128"
      "48111745028410270193852110555964462294895493038196"
      "4428810975665933446128475648233786783165");
  return pi;
}

/// 1/sqrt(pi) by Newton iteration y <- y (3 - pi y^2) / 2, seeded from the
/// double value; quadratic convergence reaches full precision in ~5 steps.
inline const BigFixed& big_inv_sqrt_pi() {
  static const BigFixed value = [] {
    BigFixed y = BigFixed::from_decimal("0.5641895835477562");
    const BigFixed three = BigFixed::from_uint(3);
    for (int it = 0; it < 8; ++it) {
      y = (y * (three - big_pi() * y * y)).div_small(2);
    }
    const BigFixed resid = big_pi() * y * y - BigFixed::from_uint(1);
    if (resid.abs_double() > 1e-200) {
      throw std::runtime_error("BigFixed: 1/sqrt(pi) iteration failed");
    }
    return y;
  }();
  return value;
}

}  // namespace testsupport

#endif
