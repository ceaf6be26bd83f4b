#pragma once

#include <vector>

#include <quarttrace/model.hpp>
#include <quarttrace/roots.hpp>

namespace qt {

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

struct DriftReport {
  std::vector<double> gammas;
  std::vector<double> offsets;  // |z_j - (pi j + pi/4)| at each gamma
  bool monotone_decreasing = false;
  double final_offset = 0.0;
};

// Approach of a branch root to its limiting position pi*j + pi/4 as gamma
// grows along gamma = 1 + k^4.
DriftReport root_drift(Family fam, int j, double alpha,
                       const std::vector<int>& ks, const SolverConfig& cfg);

// Eigenvalue counting function N(lambda) for a single hinged mode:
// branch roots at z = pi j exactly, so N = floor((lambda - gamma)^{1/4}/pi).
long long hinged_count_exact(double lambda, double gamma);

// Counting staircase from located roots (number of eigenvalues <= lambda).
long long staircase_count(const std::vector<SpectralPoint>& pts, double lambda);

struct SlopeGate {
  double slope = 0.0;       // d log N / d log lambda over the fitted window
  double expected = 0.0;    // 1/4 + 1/e for the gamma law exponent e
  bool within_gate = false; // |slope - expected| <= gate width
};

// Aggregated counting function over the mode ladder gamma_k = base + scale*k^e:
// N(lambda) = sum_j #{k : gamma_k + (pi j + pi/4)^4 <= lambda}, evaluated in
// closed form from the branch asymptotics (direct enumeration is hopeless for
// small e: k_max ~ lambda^{1/e}) and log-log fitted over lambda in
// [1e4, 10^5.5].
SlopeGate aggregate_slope(const GammaLaw& law, double gate_width);

struct GrowthReport {
  double slope = 0.0;  // d log lambda_n / d log n
  bool quartic = false;
};

// Single-mode eigenvalue growth: lambda_j ~ (pi j)^4, so the log-log slope
// tends to 4.
GrowthReport eigen_growth(const ModeSpec& m, Family fam, const SolverConfig& cfg);

}  // namespace qt
