#include <quarttrace/roots.hpp>

#include <cmath>
#include <limits>
#include <string>

#include <quarttrace/parallel.hpp>

namespace qt {

namespace {

constexpr double kBracketHalfWidth = 0.45;  // < pi/2: adjacent branches cannot invade

double chi(double z, const ModeSpec& m, Family fam) {
  return char_det_normalized(z, m, fam);
}

}  // namespace

double default_phase(Family fam) {
  // L01/L02 phases are the scan-calibrated constants (tan z = 1 and
  // tan z = th z respectively, both -> pi*j + pi/4); see calibrate_phase.
  return fam == Family::L03 ? 0.0 : M_PI / 4.0;
}

std::vector<double> seeds(Family fam, int j_max, double phase) {
  if (j_max < 1) throw ConfigError("seed count must be >= 1");
  (void)fam;
  std::vector<double> out;
  out.reserve(size_t(j_max));
  for (int j = 1; j <= j_max; ++j) out.push_back(M_PI * j + phase);
  return out;
}

double calibrate_phase(const ModeSpec& m, Family fam, const SolverConfig& cfg) {
  // Scan a mid-range window (branch roots are well separated there) and
  // average the offsets from the nearest lattice point pi*j.
  const double lo = 5.0 * M_PI, hi = 10.0 * M_PI;
  double prev = chi(lo, m, fam);
  double sum = 0.0;
  int found = 0;
  for (double z = lo + cfg.grid_step; z <= hi; z += cfg.grid_step) {
    const double cur = chi(z, m, fam);
    if (prev * cur < 0.0) {
      double a = z - cfg.grid_step, b = z;
      double fa = prev;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = chi(mid, m, fam);
        if (fa * fm <= 0.0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      const double root = 0.5 * (a + b);
      double off = std::fmod(root, M_PI);
      if (off > M_PI / 2.0) off -= M_PI;  // offset from the nearest lattice point
      sum += off;
      ++found;
    }
    prev = cur;
  }
  if (found == 0) throw NumericError("phase calibration scan found no roots");
  return sum / found;
}

SpectralPoint bracket_and_refine(const ModeSpec& m, Family fam, int j, double seed,
                                 const SolverConfig& cfg) {
  double a = seed - kBracketHalfWidth, b = seed + kBracketHalfWidth;
  if (a <= 0.0) a = 0.5 * cfg.grid_step;
  double fa = chi(a, m, fam), fb = chi(b, m, fam);
  if (fa * fb > 0.0) {
    // Fallback: fine scan inside the bracket for a sign-change cell.
    bool bracketed = false;
    double prev = fa;
    for (double x = a + cfg.grid_step; x <= b + 1e-12; x += cfg.grid_step) {
      const double cur = chi(x, m, fam);
      if (prev * cur <= 0.0) {
        b = x;
        fb = cur;
        a = x - cfg.grid_step;
        fa = prev;
        bracketed = true;
        break;
      }
      prev = cur;
    }
    if (!bracketed)
      throw NumericError("no sign change near seed " + std::to_string(seed) +
                         "; rerun with a finer scan grid");
  }

  SpectralPoint p;
  p.k = m.k;
  p.j = j;
  p.family = fam;
  p.seed = seed;
  p.origin = SpectralPoint::Origin::AsymptoticBranch;

  // Bisection until the bracket stops shrinking, with a secant polish.
  int it = 0;
  double mid = 0.5 * (a + b);
  while (b - a > cfg.root_tol) {
    mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // bracket at machine resolution
    const double fm = chi(mid, m, fam);
    ++it;
    if (fm == 0.0) {
      a = b = mid;
      break;
    }
    if (fa * fm < 0.0) {
      b = mid;
      fb = fm;
    } else {
      a = mid;
      fa = fm;
    }
  }
  // The loop exits either by shrinking below tolerance or by hitting
  // machine resolution; the latter with a stricter tolerance is a stall.
  if (b - a > std::max(cfg.root_tol, 4.0 * std::numeric_limits<double>::epsilon() *
                                         (std::fabs(a) + 1.0)))
    throw NumericError("max iterations: bracket stalled above tolerance at z ~= " +
                       std::to_string(mid));
  if (fb != fa && std::isfinite(fa) && std::isfinite(fb) && fb - fa != 0.0) {
    const double zs = a - fa * (b - a) / (fb - fa);  // secant polish inside bracket
    if (zs > a && zs < b) mid = zs;
    else mid = 0.5 * (a + b);
  } else {
    mid = 0.5 * (a + b);
  }
  p.z = mid;
  p.lambda = m.lambda_of(p.z);
  p.refine_iterations = it;
  p.residual = std::fabs(chi(p.z, m, fam));
  return p;
}

std::vector<SpectralPoint> small_root_scan(const ModeSpec& m, Family fam,
                                           const SolverConfig& cfg) {
  std::vector<SpectralPoint> out;
  const double first_seed = M_PI + default_phase(fam);
  const double hi = first_seed - 0.5;
  double prev_z = cfg.grid_step;
  double prev = chi(prev_z, m, fam);
  for (double z = prev_z + cfg.grid_step; z <= hi; z += cfg.grid_step) {
    const double cur = chi(z, m, fam);
    if (prev * cur < 0.0) {
      double a = prev_z, b = z, fa = prev;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = chi(mid, m, fam);
        if (fa * fm <= 0.0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      SpectralPoint p;
      p.k = m.k;
      p.j = -int(out.size()) - 1;  // negative indices below the branch
      p.family = fam;
      p.z = 0.5 * (a + b);
      p.lambda = m.lambda_of(p.z);
      p.seed = 0.5 * (prev_z + z);
      p.refine_iterations = 80;
      p.residual = std::fabs(chi(p.z, m, fam));
      p.origin = SpectralPoint::Origin::SmallRootScan;
      out.push_back(p);
    }
    prev_z = z;
    prev = cur;
  }
  return out;
}

std::vector<SpectralPoint> locate_roots(const ModeSpec& m, Family fam, int j_max,
                                        const SolverConfig& cfg) {
  const std::vector<double> s = seeds(fam, j_max);
  std::vector<SpectralPoint> out(static_cast<size_t>(j_max));
  parallel_for(j_max, [&](int i) {
    out[size_t(i)] = bracket_and_refine(m, fam, i + 1, s[size_t(i)], cfg);
  });
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].z <= out[i - 1].z)
      throw NumericError("branch roots out of order near j = " + std::to_string(out[i].j));
  return out;
}

double imaginary_twin_check(const SpectralPoint& p, const ModeSpec& m) {
  if (p.family != Family::Main)
    throw ConfigError("imaginary-twin check applies only to the Main family");
  return char_det_imag_normalized(p.z, m);
}

DiagBasis diag_basis(double a, double t) {
  const double sh = std::sinh(a * t), ch = std::cosh(a * t);
  const double sn = std::sin(a * t), cs = std::cos(a * t);
  const double a2 = a * a, a3 = a2 * a;
  DiagBasis b;
  b.u = sh * cs;
  b.up = a * (ch * cs - sh * sn);
  b.upp = -2.0 * a2 * ch * sn;
  b.uppp = -2.0 * a3 * (sh * sn + ch * cs);
  b.v = ch * sn;
  b.vp = a * (sh * sn + ch * cs);
  b.vpp = 2.0 * a2 * sh * cs;
  b.vppp = 2.0 * a3 * (ch * cs - sh * sn);
  return b;
}

double diag_coefficient(const DiagonalPoint& p, const ModeSpec& m) {
  const DiagBasis b = diag_basis(p.a, 1.0);
  const double lg = p.lambda * m.gamma_alpha();
  double r1u, r1v;
  if (p.family == Family::Main) {
    r1u = -b.uppp - lg * b.u;
    r1v = -b.vppp - lg * b.v;
  } else {
    r1u = b.u;
    r1v = b.v;
  }
  if (r1u == 0.0) throw NumericError("degenerate diagonal boundary row");
  return -r1v / r1u;
}

double diag_det(double a, const ModeSpec& m, Family fam) {
  if (a == 0.0) return 0.0;
  const DiagBasis b = diag_basis(a, 1.0);
  const double lam = m.gamma - 4.0 * a * a * a * a;
  const double lg = lam * m.gamma_alpha();
  double r1u, r1v, r2u, r2v;
  switch (fam) {
    case Family::Main:
      r1u = -b.uppp - lg * b.u;
      r1v = -b.vppp - lg * b.v;
      r2u = b.upp - lg * b.up;
      r2v = b.vpp - lg * b.vp;
      break;
    case Family::L01:
      r1u = b.u;
      r1v = b.v;
      r2u = b.upp - lg * b.up;
      r2v = b.vpp - lg * b.vp;
      break;
    case Family::L02:
      r1u = b.u;
      r1v = b.v;
      r2u = b.up;
      r2v = b.vp;
      break;
    case Family::L03:
    default:
      r1u = b.u;
      r1v = b.v;
      r2u = b.upp;
      r2v = b.vpp;
      break;
  }
  const double det = r1u * r2v - r1v * r2u;
  // Normalize by a positive envelope so the scan stays O(1).
  const double ch2 = std::cosh(a) * std::cosh(a);
  const double a2 = a * a, a3 = a2 * a;
  const double scale = ch2 * (1.0 + std::fabs(lg)) *
                       (fam == Family::Main ? (a3 + std::fabs(lg)) * (a2 + std::fabs(lg) * a)
                                            : (1.0 + a2 + std::fabs(lg) * a));
  return det / scale;
}

std::vector<DiagonalPoint> diag_root_scan(const ModeSpec& m, Family fam, double a_max,
                                          const SolverConfig& cfg) {
  std::vector<DiagonalPoint> out;
  double prev_a = cfg.grid_step;
  double prev = diag_det(prev_a, m, fam);
  for (double a = prev_a + cfg.grid_step; a <= a_max; a += cfg.grid_step) {
    const double cur = diag_det(a, m, fam);
    if (prev * cur < 0.0) {
      double lo = prev_a, hi = a, flo = prev;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = diag_det(mid, m, fam);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      DiagonalPoint p;
      p.k = m.k;
      p.family = fam;
      p.a = 0.5 * (lo + hi);
      p.lambda = m.gamma - 4.0 * std::pow(p.a, 4);
      p.residual = std::fabs(diag_det(p.a, m, fam));
      out.push_back(p);
    }
    prev_a = a;
    prev = cur;
  }
  return out;
}

ExclusionReport complex_diag_exclusion(const ModeSpec& m, double y_max,
                                       const SolverConfig& cfg) {
  if (y_max < 5.0) throw ConfigError("exclusion scan needs y_max >= 5");
  ExclusionReport r;
  r.y_max = y_max;
  const double step = 0.1;
  double prev_y = cfg.grid_step;
  double prev = K_exclusion_normalized(prev_y, m);
  bool change_beyond_five = false;
  for (double y = prev_y + step; y <= y_max + 1e-12; y += step) {
    const double cur = K_exclusion_normalized(y, m);
    if (prev * cur < 0.0) {
      r.sign_change_intervals.emplace_back(prev_y, y);
      if (prev_y >= 5.0) change_beyond_five = true;
      double a = prev_y, b = y, fa = prev;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = K_exclusion_normalized(mid, m);
        if (fa * fm <= 0.0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      const double root = 0.5 * (a + b);
      r.candidate_lambdas.push_back(m.gamma - 4.0 * std::pow(root, 4));
    }
    prev_y = y;
    prev = cur;
  }
  r.constant_sign_beyond_five = !change_beyond_five;
  return r;
}

}  // namespace qt
