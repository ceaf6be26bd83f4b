#pragma once

#include <quarttrace/model.hpp>
#include <quarttrace/scaled.hpp>

namespace qt {

// Values of the four primitive functions at one argument x = z*t.  The
// hyperbolic pair is carried scaled (mantissa * exp(e)); the circular
// pair fits in a plain double.
struct Basis {
  Scaled sh, ch;
  double sn = 0.0, cs = 1.0;
};

Basis basis_at(double x);

// Coefficient elimination conventions.  Every downstream formula fixes
// c2 = 1 and eliminates c1 through one of the two boundary rows:
//   OmegaTwo:     c1 = H(z), which kills y''(1) - lambda*g*y'(1) identically;
//   RightEndZero: c1 = -sin z / sh z, which kills y(1) identically.
// Mixing conventions between a function and its derivative is a bug.
enum class Convention { OmegaTwo, RightEndZero };

struct Coeffs {
  Scaled c1, dc1;  // c1(z) and its z-derivative; c2 == 1 throughout
};

Coeffs coefficients(double z, const ModeSpec& m, Convention conv);

// y = c1*sh(zt) + sin(zt) and its t-derivatives at t = 1, plus the
// z-derivatives needed by the norming identities.
struct EndState {
  Scaled y, yp, ypp, yppp;        // y(1), y'(1), y''(1), y'''(1)
  Scaled dy, dyp, dypp, dyppp;    // d/dz of the above
};

EndState end_state(double z, const ModeSpec& m, const Coeffs& c);
inline EndState end_state(double z, const ModeSpec& m, Convention conv) {
  return end_state(z, m, coefficients(z, m, conv));
}

// Boundary forms on an arbitrary coefficient pair (c1, c2).
Scaled omega1(double z, const ModeSpec& m, const Scaled& c1, double c2);
Scaled omega2(double z, const ModeSpec& m, const Scaled& c1, double c2);

// c1 = H(z) * c2 elimination quotient; throws PoleError near the
// isolated zeros of its denominator.
Scaled H_value(double z, const ModeSpec& m);

// Characteristic determinant of the family's two right-end boundary
// rows on the basis columns (sh zt, sin zt).
Scaled char_det(double z, const ModeSpec& m, Family fam);

// det divided by a positive smooth envelope (same products with every
// circular factor replaced by 1 and sh/ch by ch): O(1), same zero set,
// no exponential growth and no spurious sign plateaus.
double char_det_normalized(double z, const ModeSpec& m, Family fam);

// |det at i*y| / envelope(y), evaluated through the basis swap
// sh(iy t) = i sin(yt), sin(iy t) = i sh(yt); vanishes at real roots.
double char_det_imag_normalized(double y, const ModeSpec& m);

// Right side of the simplified dispersion relation tan z = rhs(z);
// same zero set as the Main determinant away from tan poles.
double dispersion_rhs(double z, const ModeSpec& m);

// Exclusion function for candidate complex roots z = y(1 +- i); a zero
// would signal an eigenvalue lambda = gamma - 4y^4.
Scaled K_exclusion(double y, const ModeSpec& m);
double K_exclusion_normalized(double y, const ModeSpec& m);

// f(z) = y(1) * omega1(z) under the OmegaTwo convention: vanishes
// exactly at the Main roots, and f'(z*) = 4z^3 * |Psi|^2.
Scaled f_k(double z, const ModeSpec& m);
Scaled f_k_prime(double z, const ModeSpec& m);

enum class Residue { Fk, F1k, F2k };

// Meromorphic integrands whose residues at the family root sets are
// +-c^2 * y^2(t).  Fk uses OmegaTwo; F1k/F2k use RightEndZero.
double residue_integrand(double z, double t, const ModeSpec& m, Residue which);

double eigenfunction_value(double z, double t, const ModeSpec& m, Convention conv);
Scaled eigenfunction_scaled(double z, double t, const ModeSpec& m, const Coeffs& c);

}  // namespace qt
