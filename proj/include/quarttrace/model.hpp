#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <quarttrace/errors.hpp>

namespace qt {

// One scalar mode problem: y'''' + gamma*y = lambda*y on [0,1] with
// y(0) = y''(0) = 0 and a right-end condition pair chosen per family.
struct ModeSpec {
  int k = 1;            // mode index
  double gamma = 2.0;   // coefficient eigenvalue, > 1
  double alpha = 0.25;  // boundary-operator exponent, in (0, 1/2)

  double gamma_alpha() const { return std::pow(gamma, alpha); }
  double lambda_of(double z) const { return z * z * z * z + gamma; }
};

// gamma_k = base + scale * k^exponent
struct GammaLaw {
  double base = 1.0;
  double scale = 1.0;
  double exponent = 4.0;

  double operator()(int k) const { return base + scale * std::pow(double(k), exponent); }
  void validate() const;
};

enum class Family { Main, L01, L02, L03 };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Right-end boundary behaviour that matters downstream.
inline bool family_lambda_dependent(Family f) { return f == Family::Main || f == Family::L01; }

// Diagonal perturbation q_k(t) = c_k * g(t), with zero-mean profile g.
struct PotentialSpec {
  std::vector<double> coefficients;        // c_k, k = 1..K
  std::function<double(double)> profile;   // g(t) on [0,1]
  std::string profile_name = "cos_m";
  double mean_tol = 1e-10;

  double q(int k, double t) const { return coefficients.at(size_t(k) - 1) * profile(t); }
  double coeff(int k) const { return coefficients.at(size_t(k) - 1); }
  double endpoint_sum(int k) const { return coeff(k) * (profile(0.0) + profile(1.0)); }
};

struct SolverConfig {
  int modes = 1;              // K_max
  int roots_per_mode = 40;    // J_max (reporting depth)
  double grid_step = 0.05;    // small-root scan / bracket fallback step
  double root_tol = 1e-12;    // |dz| tolerance for refinement
  int quad_panels = 2000;     // composite Simpson panels (even)
  int galerkin_dim = 200;     // Galerkin truncation N
  int rk4_steps = 4096;       // shooting integrator steps
  double chain_tol = 1e-2;    // pairwise family spread tolerance
  std::vector<int> ladder = {10, 20, 40};
  bool include_small_roots = false;  // toggle for trace sums
  bool double_multiplicity = false;  // count each Main root twice (z and iz twin)

  void validate() const;
};

struct ValidationReport {
  double coeff_abs_sum = 0.0;
  double profile_integral = 0.0;
  bool coeffs_ok = false;
  bool mean_ok = false;
  bool pass() const { return coeffs_ok && mean_ok; }
};

// Builds K_max modes from the gamma law; rejects alpha outside (0,1/2)
// and gamma_1 <= 1.
std::vector<ModeSpec> build_modes(const GammaLaw& law, double alpha, int k_max);

ValidationReport validate_potential(const PotentialSpec& p, const SolverConfig& cfg);

// Profile registry used by the config file: cos_m -> cos(2*pi*m*t),
// legendre_centered -> P_n(2t-1) with its mean removed.
std::function<double(double)> make_profile(const std::string& name, int order);

}  // namespace qt
