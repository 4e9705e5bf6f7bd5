// Floating-point value in sign/log-magnitude form: a mantissa kept in [1, 2)
// plus an explicit 64-bit power-of-two exponent.  Used by the large-order
// sampler, where determinants overflow any hardware exponent range.  The
// mantissa type is a parameter: long double for moderate lines, quad
// precision where the conditioning of long lines demands the headroom.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace aztec {

template <class Mant>
struct ScaledRealT {
  Mant m = 0;  // 0, or |m| in [1, 2)
  int64_t e = 0;

  ScaledRealT() = default;
  explicit ScaledRealT(double v) {
    m = v;
    e = 0;
    renorm();
  }

  void renorm() {
    if (m == 0) {
      e = 0;
      return;
    }
    Mant a = m < 0 ? -m : m;
    while (a >= (Mant)0x1p64) {
      m *= (Mant)0x1p-64;
      a *= (Mant)0x1p-64;
      e += 64;
    }
    while (a < (Mant)0x1p-64) {
      m *= (Mant)0x1p64;
      a *= (Mant)0x1p64;
      e -= 64;
    }
    while (a >= 2) {
      m *= (Mant)0.5;
      a *= (Mant)0.5;
      ++e;
    }
    while (a < 1) {
      m *= 2;
      a *= 2;
      --e;
    }
  }

  bool zero() const { return m == 0; }
  int sign() const { return m > 0 ? 1 : (m < 0 ? -1 : 0); }

  double log2_abs() const {
    if (zero()) return -std::numeric_limits<double>::infinity();
    double md = static_cast<double>(m < 0 ? -m : m);
    return static_cast<double>(e) + std::log2(md);
  }

  double to_double() const {
    if (zero()) return 0.0;
    if (e > 1020)
      return m > 0 ? std::numeric_limits<double>::infinity()
                   : -std::numeric_limits<double>::infinity();
    if (e < -1060) return 0.0;
    return std::ldexp(static_cast<double>(m), static_cast<int>(e));
  }

  // exact scaling of a mantissa by 2^k, |k| < 200
  static Mant shift(Mant v, int k) {
    while (k >= 64) {
      v *= (Mant)0x1p64;
      k -= 64;
    }
    while (k <= -64) {
      v *= (Mant)0x1p-64;
      k += 64;
    }
    if (k > 0) v *= (Mant)(1ULL << k);
    if (k < 0) v /= (Mant)(1ULL << -k);
    return v;
  }

  friend ScaledRealT operator*(const ScaledRealT& a, const ScaledRealT& b) {
    if (a.zero() || b.zero()) return {};
    ScaledRealT r;
    r.m = a.m * b.m;
    r.e = a.e + b.e;
    r.renorm();
    return r;
  }
  friend ScaledRealT operator/(const ScaledRealT& a, const ScaledRealT& b) {
    ScaledRealT r;
    r.m = a.m / b.m;
    r.e = a.e - b.e;
    r.renorm();
    return r;
  }
  friend ScaledRealT operator+(const ScaledRealT& a, const ScaledRealT& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    int64_t d = a.e - b.e;
    if (d > 130) return a;
    if (d < -130) return b;
    ScaledRealT r;
    if (d >= 0) {
      r.m = a.m + shift(b.m, static_cast<int>(-d));
      r.e = a.e;
    } else {
      r.m = b.m + shift(a.m, static_cast<int>(d));
      r.e = b.e;
    }
    r.renorm();
    return r;
  }
  friend ScaledRealT operator-(const ScaledRealT& a, const ScaledRealT& b) {
    return a + (-b);
  }
  ScaledRealT operator-() const {
    ScaledRealT r = *this;
    r.m = -r.m;
    return r;
  }
  ScaledRealT& operator+=(const ScaledRealT& o) { return *this = *this + o; }
  ScaledRealT& operator-=(const ScaledRealT& o) { return *this = *this - o; }
  ScaledRealT& operator*=(const ScaledRealT& o) { return *this = *this * o; }
  ScaledRealT& operator/=(const ScaledRealT& o) { return *this = *this / o; }

  // |a| < |b|
  static bool abs_less(const ScaledRealT& a, const ScaledRealT& b) {
    if (a.zero()) return !b.zero();
    if (b.zero()) return false;
    if (a.e != b.e) return a.e < b.e;
    Mant am = a.m < 0 ? -a.m : a.m;
    Mant bm = b.m < 0 ? -b.m : b.m;
    return am < bm;
  }

  friend bool operator<(const ScaledRealT& a, const ScaledRealT& b) {
    return (a - b).sign() < 0;
  }
};

// quad mantissa: ~33 significant digits against long-line conditioning
using ScaledReal = ScaledRealT<__float128>;
// extended mantissa: cheap, adequate for moderate lines
using ScaledRealLD = ScaledRealT<long double>;

}  // namespace aztec
