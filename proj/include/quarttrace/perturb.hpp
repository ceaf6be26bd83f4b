#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include <quarttrace/norming.hpp>

namespace qt {

struct GalerkinSystem {
  int k = 1;
  Family family = Family::Main;
  int dim = 0;
  std::vector<double> lambda;  // unperturbed eigenvalues, ascending
  Eigen::MatrixXd Q;           // <q y_j, y_l> in the normalized eigenbasis
};

// Perturbation matrix by composite Simpson over >= max(quad_panels, 8*dim)
// panels; aborts if the supplied basis is not orthonormal to 1e-6.
GalerkinSystem assemble(const ModeSpec& m, Family fam,
                        const std::function<double(double)>& qk,
                        const std::vector<NormedEigenpair>& basis,
                        const SolverConfig& cfg);

// Eigenvalues of diag(lambda) + Q; only the lowest ceil(dim/2) are kept
// (the upper half of a truncated projection is spectrally polluted).
std::vector<double> perturbed_eigenvalues(const GalerkinSystem& sys);

// Independent oracle: RK4 shooting on y'''' = (mu - gamma - q) y from the
// left boundary, sign scan + bisection of the right-end determinant in
// w = (mu - gamma)^{1/4} over (w_lo, w_hi).  Renormalizes the two basis
// solutions in flight; a halved-step disagreement > 1e-5 relative is an
// error.
std::vector<double> shooting_eigenvalues(const ModeSpec& m, Family fam,
                                         const std::function<double(double)>& qk,
                                         double w_lo, double w_hi,
                                         const SolverConfig& cfg);

// Right-end boundary determinant of the two shooting solutions at mu,
// normalized in flight (positive factors only: sign is meaningful).
double shooting_det(const ModeSpec& m, Family fam,
                    const std::function<double(double)>& qk, double mu, int steps);

}  // namespace qt
