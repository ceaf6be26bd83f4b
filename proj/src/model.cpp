#include <quarttrace/model.hpp>

#include <cmath>

namespace qt {

const char* family_name(Family f) {
  switch (f) {
    case Family::Main: return "Main";
    case Family::L01: return "L01";
    case Family::L02: return "L02";
    case Family::L03: return "L03";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "Main" || name == "main") return Family::Main;
  if (name == "L01" || name == "l01") return Family::L01;
  if (name == "L02" || name == "l02") return Family::L02;
  if (name == "L03" || name == "l03") return Family::L03;
  throw ConfigError("unknown boundary family: " + name);
}

void GammaLaw::validate() const {
  if (base <= 0.0 || scale <= 0.0 || exponent <= 0.0)
    throw ConfigError("gamma law parameters must be positive");
  if ((*this)(1) <= 1.0) throw ConfigError("gamma must exceed 1");
}

void SolverConfig::validate() const {
  if (modes < 1) throw ConfigError("modes must be >= 1");
  if (roots_per_mode < 1) throw ConfigError("roots_per_mode must be >= 1");
  if (grid_step <= 0.0 || grid_step >= 0.25)
    throw ConfigError("grid_step must be in (0, 1/4): roots are pi-separated");
  if (root_tol < 0.0) throw ConfigError("root_tol must be >= 0");
  if (quad_panels < 2 || quad_panels % 2 != 0)
    throw ConfigError("quad_panels must be even and >= 2");
  if (galerkin_dim < 2 * roots_per_mode)
    throw ConfigError("galerkin_dim must be >= 2 * roots_per_mode");
  if (rk4_steps < 16) throw ConfigError("rk4_steps must be >= 16");
  if (ladder.empty()) throw ConfigError("ladder must be nonempty");
  for (size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] < 1 || ladder[i] > roots_per_mode)
      throw ConfigError("ladder entries must lie in [1, roots_per_mode]");
    if (i > 0 && ladder[i] <= ladder[i - 1])
      throw ConfigError("ladder must be strictly increasing");
  }
}

std::vector<ModeSpec> build_modes(const GammaLaw& law, double alpha, int k_max) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw ConfigError("alpha out of range (0, 1/2)");
  law.validate();
  if (k_max < 1) throw ConfigError("mode count must be >= 1");
  std::vector<ModeSpec> modes;
  modes.reserve(size_t(k_max));
  double prev = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    const double g = law(k);
    if (g <= prev) throw ConfigError("gamma must be strictly increasing");
    modes.push_back(ModeSpec{k, g, alpha});
    prev = g;
  }
  return modes;
}

namespace {

double simpson(const std::function<double(double)>& f, int panels) {
  const double h = 1.0 / panels;
  double s = f(0.0) + f(1.0);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

}  // namespace

ValidationReport validate_potential(const PotentialSpec& p, const SolverConfig& cfg) {
  if (!p.profile) throw ConfigError("potential profile not set");
  if (p.coefficients.empty()) throw ConfigError("potential has no coefficients");
  ValidationReport r;
  for (double c : p.coefficients) r.coeff_abs_sum += std::fabs(c);
  r.coeffs_ok = std::isfinite(r.coeff_abs_sum);
  r.profile_integral = simpson(p.profile, cfg.quad_panels);
  r.mean_ok = std::fabs(r.profile_integral) <= p.mean_tol;
  return r;
}

namespace {

double legendre(int n, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int m = 2; m <= n; ++m) {
    const double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace

std::function<double(double)> make_profile(const std::string& name, int order) {
  if (name == "cos_m") {
    if (order < 1) throw ConfigError("cos_m profile needs order >= 1");
    return [order](double t) { return std::cos(2.0 * M_PI * order * t); };
  }
  if (name == "legendre_raw") {
    // Uncentered shifted Legendre; order 0 is the constant 1 with mean 1,
    // so this profile can (intentionally) fail the zero-mean validation.
    if (order < 0) throw ConfigError("legendre_raw needs order >= 0");
    return [order](double t) { return legendre(order, 2.0 * t - 1.0); };
  }
  if (name == "legendre_centered") {
    if (order < 0) throw ConfigError("legendre_centered needs order >= 0");
    // P_n(2t-1) integrates to 0 over [0,1] for n >= 1; only n = 0 has a mean.
    const double mean = (order == 0) ? 1.0 : 0.0;
    return [order, mean](double t) { return legendre(order, 2.0 * t - 1.0) - mean; };
  }
  throw ConfigError("unknown profile: " + name);
}

}  // namespace qt
