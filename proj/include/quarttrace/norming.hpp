#pragma once

#include <functional>
#include <vector>

#include <quarttrace/charfun.hpp>
#include <quarttrace/roots.hpp>

namespace qt {

// Coefficient elimination used for a family's eigenfunctions.
inline Convention family_convention(Family fam) {
  return (fam == Family::Main || fam == Family::L01) ? Convention::OmegaTwo
                                                     : Convention::RightEndZero;
}

struct NormedEigenpair {
  SpectralPoint point;
  double c_squared = 0.0;        // 1 / norm_closed
  double norm_closed = 0.0;      // closed-antiderivative norm
  double norm_derivative = 0.0;  // from the characteristic-derivative identity
  Scaled c1;                     // eigenfunction coefficient, c2 = 1
};

// Squared norm via closed antiderivatives of sh^2, sin^2, sh*sin plus the
// family's boundary terms (weight gamma^alpha on y(1), y'(1) as dictated
// by the direct-sum inner product).
double norm_closed(const ModeSpec& m, const SpectralPoint& p);

// Same quantity from the z-derivative of the family's characteristic
// function, divided by 4z^3; the dual-route agreement is the norming
// identity under test.
double norm_derivative(const ModeSpec& m, const SpectralPoint& p);

NormedEigenpair normalize(const ModeSpec& m, const SpectralPoint& p);
std::vector<NormedEigenpair> normalize_all(const ModeSpec& m,
                                           const std::vector<SpectralPoint>& pts);

// Residue sign of the family's integrand at each root set, fixed by the
// positivity of the squared norms (regression-tested constants):
//   Fk  at Main z: +1,  Fk at L01 beta: -1,
//   F1k at L01 beta: +1,
//   F2k at L02 delta: +1,  F2k at L03 rho: -1.
int residue_sign(Residue which, Family root_family);

// Numeric residue lim_{z->z*} (z - z*) F(z, t) of the family integrand at
// a root, by Richardson extrapolation of h * F(z* + h, t); the identity
// under test equates it with residue_sign * c^2 * y(t)^2.
double residue_limit(const ModeSpec& m, Residue which, const SpectralPoint& p, double t);

struct VectorValue {
  double function_value = 0.0;  // c * y(t)
  double boundary1 = 0.0;       // c * gamma^alpha * y(1)   (lambda-dependent families)
  double boundary2 = 0.0;       // c * gamma^alpha * y'(1)
  bool has_boundary = false;
};

VectorValue eigenvector(const ModeSpec& m, const NormedEigenpair& pair, double t);

// Direct-sum inner product of two normalized eigenvectors, by quadrature;
// ~0 off the diagonal, ~1 on it.
double pair_inner_product(const ModeSpec& m, const NormedEigenpair& a,
                          const NormedEigenpair& b, int panels);

// Lambda-norm and first-order trace contribution of a diagonal-family
// eigenvalue (z = a(1+i)); used when such roots are folded into sums.
double diag_norm_closed(const ModeSpec& m, const DiagonalPoint& p, int panels);
double diag_first_order(const ModeSpec& m, const DiagonalPoint& p,
                        const std::function<double(double)>& qk, int panels);

}  // namespace qt
