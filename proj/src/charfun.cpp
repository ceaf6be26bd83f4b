#include <quarttrace/charfun.hpp>

#include <cmath>

namespace qt {

namespace {

Scaled S(double v) { return Scaled::from(v); }

// Numerator / denominator of H(z) and their z-derivatives, scaled.
struct HParts {
  Scaled P, Q, dP, dQ;
};

HParts h_parts(double z, const ModeSpec& m) {
  const double g = m.gamma_alpha();
  const double lam = m.lambda_of(z);
  const Basis b = basis_at(z);
  HParts h;
  h.P = S(z * b.sn + lam * g * b.cs);
  h.Q = z * b.sh - (lam * g) * b.ch;
  h.dP = S(b.sn + z * b.cs + 4.0 * z * z * z * g * b.cs - lam * g * b.sn);
  h.dQ = b.sh + z * b.ch - (4.0 * z * z * z * g) * b.ch - (lam * g) * b.sh;
  return h;
}

}  // namespace

Basis basis_at(double x) {
  Basis b;
  b.sn = std::sin(x);
  b.cs = std::cos(x);
  if (x <= 30.0) {
    b.sh = Scaled::from(std::sinh(x));
    b.ch = Scaled::from(std::cosh(x));
  } else {
    const double d = std::exp(-2.0 * x);
    b.sh = Scaled::make((1.0 - d) * 0.5, x);
    b.ch = Scaled::make((1.0 + d) * 0.5, x);
  }
  return b;
}

Scaled H_value(double z, const ModeSpec& m) {
  const HParts h = h_parts(z, m);
  if (h.Q.zero() || std::fabs(h.Q.m) < 1e-14)
    throw PoleError("H(z) denominator vanishes near z = " + std::to_string(z));
  return h.P / h.Q;
}

Coeffs coefficients(double z, const ModeSpec& m, Convention conv) {
  Coeffs c;
  if (conv == Convention::OmegaTwo) {
    const HParts h = h_parts(z, m);
    if (h.Q.zero() || std::fabs(h.Q.m) < 1e-14)
      throw PoleError("H(z) denominator vanishes near z = " + std::to_string(z));
    c.c1 = h.P / h.Q;
    c.dc1 = (h.dP * h.Q - h.P * h.dQ) / (h.Q * h.Q);
  } else {
    const Basis b = basis_at(z);
    if (b.sh.zero())
      throw PoleError("sh z vanishes at z = " + std::to_string(z));
    c.c1 = S(-b.sn) / b.sh;
    c.dc1 = -(b.cs * b.sh - b.sn * b.ch) / (b.sh * b.sh);
  }
  return c;
}

EndState end_state(double z, const ModeSpec& m, const Coeffs& c) {
  const Basis b = basis_at(z);
  const double z2 = z * z, z3 = z2 * z;
  EndState s;
  s.y = c.c1 * b.sh + S(b.sn);
  s.yp = z * (c.c1 * b.ch + S(b.cs));
  s.ypp = z2 * (c.c1 * b.sh - S(b.sn));
  s.yppp = z3 * (c.c1 * b.ch - S(b.cs));
  s.dy = c.dc1 * b.sh + c.c1 * b.ch + S(b.cs);
  s.dyp = (c.c1 * b.ch + S(b.cs)) + z * (c.dc1 * b.ch + c.c1 * b.sh - S(b.sn));
  s.dypp = 2.0 * z * (c.c1 * b.sh - S(b.sn)) + z2 * (c.dc1 * b.sh + c.c1 * b.ch - S(b.cs));
  s.dyppp = 3.0 * z2 * (c.c1 * b.ch - S(b.cs)) + z3 * (c.dc1 * b.ch + c.c1 * b.sh + S(b.sn));
  return s;
}

Scaled omega1(double z, const ModeSpec& m, const Scaled& c1, double c2) {
  const Basis b = basis_at(z);
  const double z3 = z * z * z;
  const double lg = m.lambda_of(z) * m.gamma_alpha();
  const Scaled y1 = c1 * b.sh + S(c2 * b.sn);
  const Scaled y3 = z3 * (c1 * b.ch - S(c2 * b.cs));
  return y3 + lg * y1;
}

Scaled omega2(double z, const ModeSpec& m, const Scaled& c1, double c2) {
  const Basis b = basis_at(z);
  const double lg = m.lambda_of(z) * m.gamma_alpha();
  const Scaled y1p = z * (c1 * b.ch + S(c2 * b.cs));
  const Scaled y2 = z * z * (c1 * b.sh - S(c2 * b.sn));
  return y2 - lg * y1p;
}

namespace {

// Expanded determinants on the basis columns (sh zt, sin zt) and their
// positive envelopes.  g = gamma^alpha, lam = z^4 + gamma.
struct DetParts {
  Scaled det;
  Scaled env;
};

DetParts det_parts(double z, const ModeSpec& m, Family fam) {
  const Basis b = basis_at(z);
  const double g = m.gamma_alpha();
  const double lam = m.lambda_of(z);
  const double lg = lam * g;
  const double z2 = z * z, z4 = z2 * z2;
  const Scaled mixed = b.sh * b.cs - b.sn * b.ch;  // sh cos - sin ch
  DetParts d;
  switch (fam) {
    case Family::Main:
      d.det = z4 * (b.ch * b.sn - b.cs * b.sh) + (2.0 * z2 * z * lg * b.cs) * b.ch +
              (2.0 * lg * z * b.sn) * b.sh + (lg * lg) * mixed;
      d.env = (2.0 * (z4 + z2 * z * lg + lg * z + lg * lg)) * b.ch;
      break;
    case Family::L01:
      d.det = (-2.0 * z * b.sn) * b.sh - lg * mixed;
      d.env = (2.0 * (z + lg)) * b.ch;
      break;
    case Family::L02:
      d.det = z * mixed;
      d.env = (2.0 * z) * b.ch;
      break;
    case Family::L03:
      d.det = (-2.0 * z2 * b.sn) * b.sh;
      d.env = (2.0 * z2) * b.ch;
      break;
  }
  return d;
}

}  // namespace

Scaled char_det(double z, const ModeSpec& m, Family fam) { return det_parts(z, m, fam).det; }

double char_det_normalized(double z, const ModeSpec& m, Family fam) {
  if (z == 0.0) return 0.0;
  const DetParts d = det_parts(z, m, fam);
  return (d.det / d.env).value();
}

double char_det_imag_normalized(double y, const ModeSpec& m) {
  if (y == 0.0) return 0.0;
  // Basis swap at i*y: sh(iyt) = i sin(yt), sin(iyt) = i sh(yt),
  // ch(iyt) = cos(yt), cos(iyt) = ch(yt), with (iy)^4 = y^4 so lambda
  // is unchanged.  The determinant becomes purely imaginary; this is
  // its coefficient of i over the real-axis envelope.
  const Basis b = basis_at(y);
  const double g = m.gamma_alpha();
  const double lg = m.lambda_of(y) * g;
  const double y2 = y * y, y4 = y2 * y2;
  const Scaled mixed = b.sn * b.ch - b.sh * b.cs;  // sin ch - sh cos
  const Scaled out = y4 * (b.cs * b.sh - b.sn * b.ch) - (2.0 * y2 * y * lg * b.cs) * b.ch -
                     (2.0 * lg * y * b.sn) * b.sh + (lg * lg) * mixed;
  const Scaled env = (2.0 * (y4 + y2 * y * lg + lg * y + lg * lg)) * b.ch;
  return std::fabs((out / env).value());
}

double dispersion_rhs(double z, const ModeSpec& m) {
  const double g = m.gamma_alpha();
  const double lam = m.lambda_of(z);
  const double lg = lam * g;
  const double th = std::tanh(z);
  const double z3 = z * z * z, z4 = z3 * z;
  const double num = -2.0 * z3 * lg + z4 * th - lg * lg * th;
  const double den = z4 + 2.0 * z * lg * th - lg * lg;
  if (std::fabs(den) < 1e-12 * (std::fabs(z4) + lg * lg + 1.0))
    throw PoleError("dispersion relation denominator vanishes near z = " + std::to_string(z));
  return num / den;
}

Scaled K_exclusion(double y, const ModeSpec& m) {
  const double g = m.gamma_alpha();
  const double y2 = y * y, y3 = y2 * y, y4 = y2 * y2;
  const double D = m.gamma - 4.0 * y4;  // lambda at z = y(1+-i)
  const Basis b2 = basis_at(2.0 * y);
  const Scaled sh2 = b2.sh, ch2 = b2.ch;
  const double sn2 = b2.sn, cs2 = b2.cs;
  Scaled k = S(-2.0 * y4 * sn2);                       // -4y^4 sin2y / 2
  k = k - (2.0 * y3 * D * g) * (S(cs2) + ch2);         // -4y^3 D g (cos+ch)/2
  k = k + (D * g * y) * (S(cs2) - ch2);                // +2 D g y (cos-ch)/2
  k = k + (2.0 * y4) * sh2;                            // +4y^4 sh2y / 2
  k = k + (0.5 * D * D * g * g) * sh2;                 // +D^2 g^2 sh2y / 2
  k = k - S(0.5 * D * D * g * g * sn2);                // -D^2 g^2 sin2y / 2
  return k;
}

double K_exclusion_normalized(double y, const ModeSpec& m) {
  if (y == 0.0) return 0.0;
  const double g = m.gamma_alpha();
  const double y2 = y * y, y3 = y2 * y, y4 = y2 * y2;
  const double D = std::fabs(m.gamma - 4.0 * y4);
  const Scaled env =
      (2.0 * (2.0 * y4 + 2.0 * y3 * D * g + D * g * y + 0.5 * D * D * g * g) + 1e-300) *
      basis_at(2.0 * y).ch;
  return (K_exclusion(y, m) / env).value();
}

Scaled f_k(double z, const ModeSpec& m) {
  const EndState s = end_state(z, m, Convention::OmegaTwo);
  const double lg = m.lambda_of(z) * m.gamma_alpha();
  return s.y * (s.yppp + lg * s.y);
}

Scaled f_k_prime(double z, const ModeSpec& m) {
  const EndState s = end_state(z, m, Convention::OmegaTwo);
  const double g = m.gamma_alpha();
  const double lg = m.lambda_of(z) * g;
  const Scaled om1 = s.yppp + lg * s.y;
  const Scaled dom1 = s.dyppp + (4.0 * z * z * z * g) * s.y + lg * s.dy;
  return s.dy * om1 + s.y * dom1;
}

Scaled eigenfunction_scaled(double z, double t, const ModeSpec& m, const Coeffs& c) {
  (void)m;
  const Basis b = basis_at(z * t);
  return c.c1 * b.sh + S(b.sn);
}

double eigenfunction_value(double z, double t, const ModeSpec& m, Convention conv) {
  return eigenfunction_scaled(z, t, m, coefficients(z, m, conv)).value();
}

double residue_integrand(double z, double t, const ModeSpec& m, Residue which) {
  const Convention conv =
      (which == Residue::Fk) ? Convention::OmegaTwo : Convention::RightEndZero;
  const Coeffs c = coefficients(z, m, conv);
  const EndState s = end_state(z, m, c);
  Scaled denom;
  switch (which) {
    case Residue::Fk:
      denom = s.y * (s.yppp + (m.lambda_of(z) * m.gamma_alpha()) * s.y);
      break;
    case Residue::F1k:
      denom = -(s.yp * (s.ypp - (m.lambda_of(z) * m.gamma_alpha()) * s.yp));
      break;
    case Residue::F2k:
      denom = s.yp * s.ypp;
      break;
  }
  const Scaled y2 = eigenfunction_scaled(z, t, m, c) * eigenfunction_scaled(z, t, m, c);
  const Scaled val = (4.0 * z * z * z) * y2 / denom;
  const double v = val.value();
  if (!std::isfinite(v) || std::fabs(v) > 1e12)
    throw PoleError("residue integrand evaluated too close to a pole at z = " +
                    std::to_string(z));
  return v;
}

}  // namespace qt
