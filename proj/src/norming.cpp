#include <quarttrace/norming.hpp>

#include <cmath>
#include <string>

namespace qt {

namespace {

double simpson01(const std::function<double(double)>& f, int panels) {
  const double h = 1.0 / panels;
  double s = f(0.0) + f(1.0);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

}  // namespace

double norm_closed(const ModeSpec& m, const SpectralPoint& p) {
  const double z = p.z;
  const Convention conv = family_convention(p.family);
  const Coeffs c = coefficients(z, m, conv);
  const Basis b1 = basis_at(z);
  const Basis b2 = basis_at(2.0 * z);

  // int_0^1 (c1 sh zt + sin zt)^2 dt by closed antiderivatives.
  const Scaled i_sh = b2.sh / (4.0 * z) - Scaled::from(0.5);
  const Scaled i_cross = (b1.ch * b1.sn - b1.sh * b1.cs) / (2.0 * z);
  const double i_sin = 0.5 - std::sin(2.0 * z) / (4.0 * z);
  Scaled n = c.c1 * c.c1 * i_sh + 2.0 * (c.c1 * i_cross) + Scaled::from(i_sin);

  const double g = m.gamma_alpha();
  if (p.family == Family::Main || p.family == Family::L01) {
    const EndState s = end_state(z, m, c);
    n = n + g * (s.yp * s.yp);
    if (p.family == Family::Main) n = n + g * (s.y * s.y);
  }
  return n.value();
}

double norm_derivative(const ModeSpec& m, const SpectralPoint& p) {
  const double z = p.z;
  const double z3 = 4.0 * z * z * z;
  Scaled v;
  switch (p.family) {
    case Family::Main:
      v = f_k_prime(z, m) / z3;
      break;
    case Family::L01: {
      const EndState s = end_state(z, m, Convention::OmegaTwo);
      v = -(s.yppp * s.dy) / z3;
      break;
    }
    case Family::L02: {
      const EndState s = end_state(z, m, Convention::RightEndZero);
      v = (s.dyp * s.ypp) / z3;
      break;
    }
    case Family::L03:
    default: {
      const EndState s = end_state(z, m, Convention::RightEndZero);
      v = -(s.yp * s.dypp) / z3;
      break;
    }
  }
  const double out = v.value();
  if (out == 0.0)
    throw NumericError("zero characteristic derivative at z = " + std::to_string(z) +
                       " (multiple root or wrong normalization)");
  return out;
}

NormedEigenpair normalize(const ModeSpec& m, const SpectralPoint& p) {
  NormedEigenpair out;
  out.point = p;
  out.c1 = coefficients(p.z, m, family_convention(p.family)).c1;
  out.norm_closed = norm_closed(m, p);
  out.norm_derivative = norm_derivative(m, p);
  if (out.norm_closed <= 0.0)
    throw NumericError("nonpositive squared norm at z = " + std::to_string(p.z));
  out.c_squared = 1.0 / out.norm_closed;
  return out;
}

std::vector<NormedEigenpair> normalize_all(const ModeSpec& m,
                                           const std::vector<SpectralPoint>& pts) {
  std::vector<NormedEigenpair> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(normalize(m, p));
  return out;
}

int residue_sign(Residue which, Family root_family) {
  switch (which) {
    case Residue::Fk:
      if (root_family == Family::Main) return +1;
      if (root_family == Family::L01) return -1;
      break;
    case Residue::F1k:
      if (root_family == Family::L01) return +1;
      break;
    case Residue::F2k:
      if (root_family == Family::L02) return +1;
      if (root_family == Family::L03) return -1;
      break;
  }
  throw ConfigError("no residue sign for that integrand/root-family combination");
}

double residue_limit(const ModeSpec& m, Residue which, const SpectralPoint& p, double t) {
  const auto probe = [&](double h) {
    return 0.5 * h * (residue_integrand(p.z + h, t, m, which) -
                      residue_integrand(p.z - h, t, m, which));
  };
  // Symmetric probe kills the odd part of the Laurent tail; a Richardson
  // step removes the leading O(h^2) error.  The step must adapt: root
  // families of different problems approach each other, and a probe wider
  // than that separation samples the foreign pole.
  double best = 0.0;
  bool have = false;
  for (double h = 1e-4; h >= 1e-8; h *= 0.25) {
    const double r = (4.0 * probe(0.5 * h) - probe(h)) / 3.0;
    if (have && std::fabs(r - best) < 5e-9) return r;
    best = r;
    have = true;
  }
  return best;
}

VectorValue eigenvector(const ModeSpec& m, const NormedEigenpair& pair, double t) {
  VectorValue v;
  const double c = std::sqrt(pair.c_squared);
  const Coeffs coeff{pair.c1, Scaled{}};
  v.function_value = c * eigenfunction_scaled(pair.point.z, t, m, coeff).value();
  if (pair.point.family == Family::Main || pair.point.family == Family::L01) {
    const EndState s = end_state(pair.point.z, m, family_convention(pair.point.family));
    const double g = m.gamma_alpha();
    v.has_boundary = true;
    v.boundary1 = (pair.point.family == Family::Main) ? c * g * s.y.value() : 0.0;
    v.boundary2 = c * g * s.yp.value();
  }
  return v;
}

double pair_inner_product(const ModeSpec& m, const NormedEigenpair& a,
                          const NormedEigenpair& b, int panels) {
  if (a.point.family != b.point.family)
    throw ConfigError("inner product requires a common family");
  const double ca = std::sqrt(a.c_squared), cb = std::sqrt(b.c_squared);
  const Coeffs cfa{a.c1, Scaled{}}, cfb{b.c1, Scaled{}};
  double ip = simpson01(
      [&](double t) {
        return ca * eigenfunction_scaled(a.point.z, t, m, cfa).value() * cb *
               eigenfunction_scaled(b.point.z, t, m, cfb).value();
      },
      panels);
  if (a.point.family == Family::Main || a.point.family == Family::L01) {
    const double g = m.gamma_alpha();
    const EndState sa = end_state(a.point.z, m, family_convention(a.point.family));
    const EndState sb = end_state(b.point.z, m, family_convention(b.point.family));
    ip += g * (ca * sa.yp.value()) * (cb * sb.yp.value());
    if (a.point.family == Family::Main) ip += g * (ca * sa.y.value()) * (cb * sb.y.value());
  }
  return ip;
}

double diag_norm_closed(const ModeSpec& m, const DiagonalPoint& p, int panels) {
  const double cu = diag_coefficient(p, m);
  const auto y = [&](double t) {
    const DiagBasis b = diag_basis(p.a, t);
    return cu * b.u + b.v;
  };
  double n = simpson01([&](double t) { return y(t) * y(t); }, panels);
  if (p.family == Family::Main || p.family == Family::L01) {
    const DiagBasis b = diag_basis(p.a, 1.0);
    const double g = m.gamma_alpha();
    const double y1 = cu * b.u + b.v, yp1 = cu * b.up + b.vp;
    n += g * yp1 * yp1;
    if (p.family == Family::Main) n += g * y1 * y1;
  }
  return n;
}

double diag_first_order(const ModeSpec& m, const DiagonalPoint& p,
                        const std::function<double(double)>& qk, int panels) {
  const double cu = diag_coefficient(p, m);
  const auto y = [&](double t) {
    const DiagBasis b = diag_basis(p.a, t);
    return cu * b.u + b.v;
  };
  const double num = simpson01([&](double t) { return qk(t) * y(t) * y(t); }, panels);
  return num / diag_norm_closed(m, p, panels);
}

}  // namespace qt
