#pragma once

#include <utility>
#include <vector>

#include <quarttrace/charfun.hpp>
#include <quarttrace/model.hpp>

namespace qt {

struct SpectralPoint {
  int k = 1;
  int j = 0;
  Family family = Family::Main;
  double z = 0.0;
  double lambda = 0.0;
  double seed = 0.0;
  int refine_iterations = 0;
  double residual = 0.0;
  enum class Origin { AsymptoticBranch, SmallRootScan } origin = Origin::AsymptoticBranch;
};

// One eigenvalue from the z = a(1 +- i) diagonal family: lambda = gamma - 4a^4.
struct DiagonalPoint {
  int k = 1;
  Family family = Family::Main;
  double a = 0.0;
  double lambda = 0.0;
  double residual = 0.0;
};

// Large-root seeds: pi*j + phase.  Main and the two y(1)=0 families with a
// lambda-free second condition drift to phase pi/4; L03 sits at pi*j exactly.
double default_phase(Family fam);
std::vector<double> seeds(Family fam, int j_max, double phase);
inline std::vector<double> seeds(Family fam, int j_max) {
  return seeds(fam, j_max, default_phase(fam));
}

// One-time phase calibration by dense scan on a reference mode: average
// offset of the scan-found large roots from the nearest pi*j.
double calibrate_phase(const ModeSpec& m, Family fam, const SolverConfig& cfg);

SpectralPoint bracket_and_refine(const ModeSpec& m, Family fam, int j, double seed,
                                 const SolverConfig& cfg);

// Sign changes of the normalized determinant on (0, first seed - 0.5].
std::vector<SpectralPoint> small_root_scan(const ModeSpec& m, Family fam,
                                           const SolverConfig& cfg);

// Branch roots j = 1..j_max (parallel refinement, ordered result).
std::vector<SpectralPoint> locate_roots(const ModeSpec& m, Family fam, int j_max,
                                        const SolverConfig& cfg);

// |scaled determinant at i*z| for a Main root; expected ~0 (the root pair
// z, iz shares one eigenvalue).  Only defined for the Main family.
double imaginary_twin_check(const SpectralPoint& p, const ModeSpec& m);

// Solution basis for lambda < gamma (z = a(1+i), z^4 = -4a^4):
// u = sh(at)cos(at), v = ch(at)sin(at), both satisfying y(0) = y''(0) = 0.
struct DiagBasis {
  double u, up, upp, uppp;
  double v, vp, vpp, vppp;
};

DiagBasis diag_basis(double a, double t);

// Determinant of the family's boundary rows on the z = a(1+i) solution
// basis {sh(at)cos(at), ch(at)sin(at)}; zeros are eigenvalues below gamma.
double diag_det(double a, const ModeSpec& m, Family fam);

// Coefficient c_u of the diagonal eigenfunction y = c_u*u + v, from the
// family's first boundary row.
double diag_coefficient(const DiagonalPoint& p, const ModeSpec& m);

// Roots of diag_det on (0, a_max].
std::vector<DiagonalPoint> diag_root_scan(const ModeSpec& m, Family fam, double a_max,
                                          const SolverConfig& cfg);

struct ExclusionReport {
  double y_max = 0.0;
  std::vector<std::pair<double, double>> sign_change_intervals;
  std::vector<double> candidate_lambdas;  // gamma - 4 y^4 at refined roots
  bool constant_sign_beyond_five = false; // no sign change of K on [5, y_max]
};

// Sign scan of the exclusion function K on (0, y_max].
ExclusionReport complex_diag_exclusion(const ModeSpec& m, double y_max,
                                       const SolverConfig& cfg);

}  // namespace qt
