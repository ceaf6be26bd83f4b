#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <quarttrace/roots.hpp>

using namespace qt;

namespace {
const ModeSpec kMode{1, 2.0, 0.25};
const SolverConfig kCfg;
}  // namespace

TEST_CASE("hinged family roots sit at pi*j exactly") {
  const auto pts = locate_roots(kMode, Family::L03, 12, kCfg);
  REQUIRE(pts.size() == 12);
  for (const auto& p : pts) {
    CHECK(std::fabs(p.z - M_PI * p.j) < 1e-11);
    CHECK(p.lambda == doctest::Approx(kMode.lambda_of(p.z)));
  }
}

TEST_CASE("frozen branch roots of the reference mode") {
  const auto pts = locate_roots(kMode, Family::Main, 2, kCfg);
  CHECK(pts[0].z == doctest::Approx(4.106063722177266).epsilon(1e-12));
  CHECK(pts[1].z == doctest::Approx(7.1752850257946248).epsilon(1e-12));
  CHECK(locate_roots(kMode, Family::L01, 1, kCfg)[0].z ==
        doctest::Approx(3.940420918025133).epsilon(1e-12));
  CHECK(locate_roots(kMode, Family::L02, 1, kCfg)[0].z ==
        doctest::Approx(3.9266023120479188).epsilon(1e-12));
}

TEST_CASE("consecutive branch roots are separated by roughly pi") {
  for (Family f : {Family::Main, Family::L01, Family::L02, Family::L03}) {
    const auto pts = locate_roots(kMode, f, 15, kCfg);
    for (size_t i = 1; i < pts.size(); ++i)
      CHECK(std::fabs(pts[i].z - pts[i - 1].z - M_PI) < 0.1);
  }
}

TEST_CASE("extending the root list does not move earlier roots") {
  const auto a = locate_roots(kMode, Family::Main, 5, kCfg);
  const auto b = locate_roots(kMode, Family::Main, 10, kCfg);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].z == b[i].z);
}

TEST_CASE("refinement is idempotent") {
  const auto p = bracket_and_refine(kMode, Family::Main, 1, M_PI + M_PI / 4.0, kCfg);
  const auto p2 = bracket_and_refine(kMode, Family::Main, 1, p.z, kCfg);
  CHECK(std::fabs(p.z - p2.z) < 1e-11);
  CHECK(std::fabs(p.residual) < 1e-9);
}

TEST_CASE("phase calibration recovers the quarter-pi drift") {
  for (Family f : {Family::Main, Family::L01, Family::L02}) {
    CHECK(calibrate_phase(kMode, f, kCfg) == doctest::Approx(M_PI / 4.0).epsilon(0.3));
  }
  CHECK(std::fabs(calibrate_phase(kMode, Family::L03, kCfg)) < 0.05);
}

TEST_CASE("sub-branch scan finds the known low roots") {
  const auto sm = small_root_scan(kMode, Family::Main, kCfg);
  REQUIRE(sm.size() == 1);
  CHECK(sm[0].z == doctest::Approx(1.24528791774597).epsilon(1e-9));
  CHECK(sm[0].origin == SpectralPoint::Origin::SmallRootScan);

  const auto sl = small_root_scan(kMode, Family::L01, kCfg);
  REQUIRE(sl.size() == 1);
  CHECK(sl[0].z == doctest::Approx(0.84690038).epsilon(1e-6));

  CHECK(small_root_scan(kMode, Family::L03, kCfg).empty());
}

TEST_CASE("diagonal family has exactly one eigenvalue below gamma") {
  const auto dm = diag_root_scan(kMode, Family::Main, 5.0, kCfg);
  REQUIRE(dm.size() == 1);
  CHECK(dm[0].a == doctest::Approx(0.8161441728).epsilon(1e-8));
  CHECK(dm[0].lambda == doctest::Approx(0.22528946).epsilon(1e-6));
  CHECK(diag_root_scan(kMode, Family::L02, 5.0, kCfg).empty());
  CHECK(diag_root_scan(kMode, Family::L03, 5.0, kCfg).empty());
}

TEST_CASE("diagonal basis satisfies the left boundary conditions and the ODE") {
  const DiagBasis b0 = diag_basis(0.9, 0.0);
  CHECK(b0.u == 0.0);
  CHECK(b0.upp == 0.0);
  CHECK(b0.v == 0.0);
  CHECK(b0.vpp == 0.0);
  // y'''' = -4a^4 y for both columns: check by finite differences.
  const double a = 0.9, t = 0.6, h = 1e-2;
  auto u_at = [&](double tt) { return diag_basis(a, tt).u; };
  const double d4 = (u_at(t - 2 * h) - 4 * u_at(t - h) + 6 * u_at(t) - 4 * u_at(t + h) +
                     u_at(t + 2 * h)) /
                    (h * h * h * h);
  CHECK(d4 == doctest::Approx(-4.0 * std::pow(a, 4.0) * u_at(t)).epsilon(1e-3));
}

TEST_CASE("rotated-root check rejects non-Main families") {
  const auto p = locate_roots(kMode, Family::L02, 1, kCfg)[0];
  CHECK_THROWS_AS(imaginary_twin_check(p, kMode), ConfigError);
}

TEST_CASE("exclusion scan reports the near-origin root and nothing beyond") {
  const auto ex = complex_diag_exclusion(kMode, 50.0, kCfg);
  CHECK(ex.constant_sign_beyond_five);
  REQUIRE(ex.sign_change_intervals.size() == 1);
  CHECK(ex.sign_change_intervals[0].first < 0.9);
  REQUIRE(ex.candidate_lambdas.size() == 1);
  CHECK(ex.candidate_lambdas[0] < kMode.gamma);
}

TEST_CASE("a rootless bracket is a numerical error, not a silent answer") {
  // Mid-gap seed for the hinged family: no root within +-0.45.
  CHECK_THROWS_AS(bracket_and_refine(kMode, Family::L03, 2, 2.0 * M_PI + 1.57, kCfg),
                  NumericError);
}
