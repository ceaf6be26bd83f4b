#pragma once

#include <cmath>
#include <cstdlib>

namespace qt {

// Number in mantissa/exponent form: value = m * exp(e).  The characteristic
// functions of this problem grow like exp(2z) and overflow doubles well
// before the root index does, so every product of hyperbolic factors is
// carried in this form.  Sign lives in the mantissa.
struct Scaled {
  double m = 0.0;
  double e = 0.0;

  static Scaled make(double mantissa, double expo) {
    Scaled s{mantissa, expo};
    s.normalize();
    return s;
  }
  static Scaled from(double v) { return make(v, 0.0); }

  void normalize() {
    if (m == 0.0 || !std::isfinite(m)) {
      e = 0.0;
      return;
    }
    int p = 0;
    const double f = std::frexp(m, &p);  // |f| in [0.5, 1)
    m = f * 2.0;                         // |m| in [1, 2)
    e += (p - 1) * 0.6931471805599453094;
  }

  double value() const { return m * std::exp(e); }
  double log_abs() const { return std::log(std::fabs(m)) + e; }
  int sign() const { return (m > 0.0) - (m < 0.0); }
  bool zero() const { return m == 0.0; }

  Scaled operator-() const { return Scaled{-m, e}; }

  friend Scaled operator*(const Scaled& a, const Scaled& b) {
    return make(a.m * b.m, a.e + b.e);
  }
  friend Scaled operator*(const Scaled& a, double c) { return make(a.m * c, a.e); }
  friend Scaled operator*(double c, const Scaled& a) { return a * c; }

  friend Scaled operator/(const Scaled& a, const Scaled& b) {
    return make(a.m / b.m, a.e - b.e);
  }
  friend Scaled operator/(const Scaled& a, double c) { return make(a.m / c, a.e); }

  friend Scaled operator+(const Scaled& a, const Scaled& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    const Scaled& hi = (a.e >= b.e) ? a : b;
    const Scaled& lo = (a.e >= b.e) ? b : a;
    const double d = lo.e - hi.e;  // <= 0
    if (d < -700.0) return hi;     // below representable contribution
    return make(hi.m + lo.m * std::exp(d), hi.e);
  }
  friend Scaled operator-(const Scaled& a, const Scaled& b) { return a + (-b); }

  Scaled abs() const { return Scaled{std::fabs(m), e}; }
};

}  // namespace qt
