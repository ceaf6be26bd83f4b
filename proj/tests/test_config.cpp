#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <quarttrace/config.hpp>

using namespace qt;

namespace {
const char* kFull = R"(
# demo configuration
[operator]
gamma_base = 1.0
gamma_scale = 1.0
gamma_exponent = 4
alpha = 0.25
modes = 3

[potential]
profile = cos_m
profile_order = 1
coefficients = inverse_square

[solver]
roots_per_mode = 20
galerkin_dim = 64
ladder = 5, 10, 20
include_small_roots = true
)";
}  // namespace

TEST_CASE("full config parses with every section") {
  const RunConfig c = parse_config_text(kFull);
  CHECK(c.alpha == doctest::Approx(0.25));
  CHECK(c.modes == 3);
  CHECK(c.law.exponent == doctest::Approx(4.0));
  REQUIRE(c.potential.coefficients.size() == 3);
  CHECK(c.potential.coefficients[1] == doctest::Approx(0.25));
  CHECK(c.solver.roots_per_mode == 20);
  CHECK(c.solver.galerkin_dim == 64);
  CHECK(c.solver.ladder == std::vector<int>{5, 10, 20});
  CHECK(c.solver.include_small_roots);
  const auto ms = c.mode_list();
  REQUIRE(ms.size() == 3);
  CHECK(ms[2].gamma == doctest::Approx(82.0));
}

TEST_CASE("defaults fill every omitted key") {
  const RunConfig c = parse_config_text("[operator]\nalpha = 0.3\n");
  CHECK(c.modes == 1);
  CHECK(c.solver.roots_per_mode == 40);
  CHECK(c.solver.galerkin_dim == 80);
  CHECK(c.solver.ladder == std::vector<int>{10, 20, 40});
  CHECK(c.potential.coefficients == std::vector<double>{1.0});
}

TEST_CASE("alpha constraint is named in the error") {
  try {
    parse_config_text("[operator]\nalpha = 0.75\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("alpha") != std::string::npos);
  }
}

TEST_CASE("malformed input is rejected with a line number") {
  try {
    parse_config_text("[operator]\nalpha 0.25\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config_text("[nonsense]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("alpha = 0.25\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[operator]\nalpha = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[solver]\nroots_per_mode = 2.5\n"), ConfigError);
}

TEST_CASE("explicit coefficient list must cover all modes") {
  CHECK_THROWS_AS(
      parse_config_text("[operator]\nmodes = 3\n[potential]\ncoefficients = list:1,2\n"),
      ConfigError);
  const RunConfig c = parse_config_text(
      "[operator]\nmodes = 2\n[potential]\ncoefficients = list: 0.5, -0.5, 9\n");
  CHECK(c.potential.coefficients == std::vector<double>{0.5, -0.5});
}

TEST_CASE("comments and blank lines are ignored") {
  const RunConfig c =
      parse_config_text("; top\n\n[operator]  # trailing\nmodes = 2  # two\n");
  CHECK(c.modes == 2);
}
