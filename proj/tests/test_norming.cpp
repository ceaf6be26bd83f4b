#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <quarttrace/norming.hpp>

using namespace qt;

namespace {
const ModeSpec kMode{1, 2.0, 0.25};
const SolverConfig kCfg;
}  // namespace

TEST_CASE("dual-route norm agreement across families and modes") {
  for (double gamma : {2.0, 17.0, 82.0}) {
    const ModeSpec m{1, gamma, 0.25};
    for (Family f : {Family::Main, Family::L01, Family::L02, Family::L03}) {
      for (const auto& p : locate_roots(m, f, 8, kCfg)) {
        const NormedEigenpair np = normalize(m, p);
        CHECK(np.norm_closed ==
              doctest::Approx(np.norm_derivative).epsilon(1e-10));
        CHECK(np.norm_closed > 0.0);
      }
    }
  }
}

TEST_CASE("frozen norm anchors") {
  const auto pm = locate_roots(kMode, Family::Main, 1, kCfg)[0];
  CHECK(normalize(kMode, pm).norm_closed ==
        doctest::Approx(0.5202450584251135).epsilon(1e-12));
  const auto pb = locate_roots(kMode, Family::L01, 1, kCfg)[0];
  CHECK(normalize(kMode, pb).norm_closed ==
        doctest::Approx(0.5048814490808282).epsilon(1e-12));
  const auto pd = locate_roots(kMode, Family::L02, 1, kCfg)[0];
  CHECK(normalize(kMode, pd).norm_closed ==
        doctest::Approx(0.4996114950997702).epsilon(1e-12));
}

TEST_CASE("hinged norms are exactly one half") {
  for (const auto& p : locate_roots(kMode, Family::L03, 6, kCfg)) {
    const NormedEigenpair np = normalize(kMode, p);
    CHECK(np.norm_closed == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(np.c_squared == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("closed-form norm matches direct quadrature of the inner product") {
  for (Family f : {Family::Main, Family::L01, Family::L02}) {
    const auto p = locate_roots(kMode, f, 3, kCfg)[2];
    const NormedEigenpair np = normalize(kMode, p);
    // pair_inner_product of the normalized pair with itself must be 1.
    CHECK(pair_inner_product(kMode, np, np, 4000) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("distinct eigenvectors are orthogonal in the direct-sum product") {
  for (Family f : {Family::Main, Family::L01, Family::L02, Family::L03}) {
    const auto pairs = normalize_all(kMode, locate_roots(kMode, f, 4, kCfg));
    for (size_t i = 0; i < pairs.size(); ++i)
      for (size_t j = i + 1; j < pairs.size(); ++j)
        CHECK(std::fabs(pair_inner_product(kMode, pairs[i], pairs[j], 4000)) < 1e-8);
  }
}

TEST_CASE("mixed-family inner products are rejected") {
  const auto a = normalize(kMode, locate_roots(kMode, Family::L02, 1, kCfg)[0]);
  const auto b = normalize(kMode, locate_roots(kMode, Family::L03, 1, kCfg)[0]);
  CHECK_THROWS_AS(pair_inner_product(kMode, a, b, 400), ConfigError);
}

TEST_CASE("residue sign table") {
  CHECK(residue_sign(Residue::Fk, Family::Main) == 1);
  CHECK(residue_sign(Residue::Fk, Family::L01) == -1);
  CHECK(residue_sign(Residue::F1k, Family::L01) == 1);
  CHECK(residue_sign(Residue::F2k, Family::L02) == 1);
  CHECK(residue_sign(Residue::F2k, Family::L03) == -1);
  CHECK_THROWS_AS(residue_sign(Residue::Fk, Family::L03), ConfigError);
  CHECK_THROWS_AS(residue_sign(Residue::F1k, Family::Main), ConfigError);
}

TEST_CASE("residue limit equals sign * c^2 y^2") {
  const double ts[3] = {0.17, 0.53, 0.88};
  struct Case {
    Family fam;
    Residue which;
  };
  for (const Case c : {Case{Family::Main, Residue::Fk}, Case{Family::L01, Residue::F1k},
                       Case{Family::L02, Residue::F2k}, Case{Family::L03, Residue::F2k}}) {
    const auto p = locate_roots(kMode, c.fam, 2, kCfg)[1];
    const NormedEigenpair np = normalize(kMode, p);
    const int sign = residue_sign(c.which, c.fam);
    for (double t : ts) {
      const Coeffs cf{np.c1, Scaled{}};
      const double y = eigenfunction_scaled(p.z, t, kMode, cf).value();
      CHECK(residue_limit(kMode, c.which, p, t) ==
            doctest::Approx(sign * np.c_squared * y * y).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("hinged residues reduce to -2 sin^2(pi j t)") {
  const auto p = locate_roots(kMode, Family::L03, 3, kCfg)[2];
  for (double t : {0.2, 0.7}) {
    const double expected = -2.0 * std::pow(std::sin(M_PI * p.j * t), 2);
    CHECK(residue_limit(kMode, Residue::F2k, p, t) ==
          doctest::Approx(expected).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("eigenvector boundary components follow the family") {
  const auto main_pair = normalize(kMode, locate_roots(kMode, Family::Main, 1, kCfg)[0]);
  CHECK(eigenvector(kMode, main_pair, 0.5).has_boundary);
  const auto l01_pair = normalize(kMode, locate_roots(kMode, Family::L01, 1, kCfg)[0]);
  const VectorValue v01 = eigenvector(kMode, l01_pair, 0.5);
  CHECK(v01.has_boundary);
  CHECK(v01.boundary1 == 0.0);  // y(1) = 0 on this family
  const auto l03_pair = normalize(kMode, locate_roots(kMode, Family::L03, 1, kCfg)[0]);
  CHECK_FALSE(eigenvector(kMode, l03_pair, 0.5).has_boundary);
}

TEST_CASE("diagonal eigenvalue norm and first-order shift") {
  const auto dm = diag_root_scan(kMode, Family::Main, 5.0, kCfg);
  REQUIRE(dm.size() == 1);
  CHECK(diag_norm_closed(kMode, dm[0], 2000) > 0.0);
  const auto q = [](double t) { return std::cos(2.0 * M_PI * t); };
  CHECK(diag_first_order(kMode, dm[0], q, 2000) ==
        doctest::Approx(0.018487825).epsilon(1e-5));
}
