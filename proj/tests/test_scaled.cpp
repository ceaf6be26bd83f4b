#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <quarttrace/scaled.hpp>

using qt::Scaled;

TEST_CASE("normalization keeps |m| in [1,2) and preserves the value") {
  const Scaled s = Scaled::make(1234.5678, 2.5);
  CHECK(std::fabs(s.m) >= 1.0);
  CHECK(std::fabs(s.m) < 2.0);
  CHECK(s.value() == doctest::Approx(1234.5678 * std::exp(2.5)).epsilon(1e-15));
}

TEST_CASE("round trip through from/value") {
  for (double v : {0.0, 1.0, -3.25, 1e-8, 12345.0}) {
    CHECK(Scaled::from(v).value() == doctest::Approx(v).epsilon(1e-14));
  }
  // Extreme magnitudes: rounding of the exponent costs eps*|e| relative
  // error in the value, so the exact invariant lives in log space.
  for (double v : {1e-300, -1e300}) {
    const Scaled s = Scaled::from(v);
    CHECK(s.log_abs() == doctest::Approx(std::log(std::fabs(v))).epsilon(1e-14));
    CHECK(s.sign() == ((v > 0) ? 1 : -1));
    CHECK(s.value() == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("arithmetic matches double arithmetic in range") {
  const Scaled a = Scaled::from(3.5), b = Scaled::from(-1.25);
  CHECK((a * b).value() == doctest::Approx(-4.375));
  CHECK((a / b).value() == doctest::Approx(-2.8));
  CHECK((a + b).value() == doctest::Approx(2.25));
  CHECK((a - b).value() == doctest::Approx(4.75));
  CHECK((-a).value() == doctest::Approx(-3.5));
  CHECK((2.0 * a).value() == doctest::Approx(7.0));
  CHECK((a / 2.0).value() == doctest::Approx(1.75));
}

TEST_CASE("addition across huge exponent gaps keeps the dominant term") {
  const Scaled big = Scaled::make(1.5, 1000.0);
  const Scaled tiny = Scaled::make(1.5, -1000.0);
  const Scaled s = big + tiny;
  CHECK(s.m == doctest::Approx(1.5));
  CHECK(s.e == doctest::Approx(1000.0));
}

TEST_CASE("products far outside double range stay finite in scaled form") {
  const Scaled a = Scaled::make(1.2, 500.0);
  const Scaled p = a * a * a;  // exp(1500), overflows a double
  CHECK(std::isfinite(p.m));
  CHECK(p.log_abs() == doctest::Approx(3.0 * std::log(1.2) + 1500.0));
  CHECK(p.sign() == 1);
}

TEST_CASE("sign and zero predicates") {
  CHECK(Scaled::from(-2.0).sign() == -1);
  CHECK(Scaled::from(0.0).zero());
  CHECK(Scaled{}.zero());
  CHECK(Scaled::from(-2.0).abs().sign() == 1);
}
