#include <quarttrace/perturb.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <quarttrace/errors.hpp>
#include <quarttrace/kernels.hpp>
#include <quarttrace/parallel.hpp>

namespace qt {

namespace {

std::vector<double> simpson_weights(int panels) {
  std::vector<double> w(panels + 1);
  const double h = 1.0 / panels;
  w[0] = w[panels] = h / 3.0;
  for (int i = 1; i < panels; ++i) w[i] = (i % 2 ? 4.0 : 2.0) * h / 3.0;
  return w;
}

}  // namespace

GalerkinSystem assemble(const ModeSpec& m, Family fam,
                        const std::function<double(double)>& qk,
                        const std::vector<NormedEigenpair>& basis,
                        const SolverConfig& cfg) {
  const int n = static_cast<int>(basis.size());
  if (n == 0) throw ConfigError("empty projection basis");

  GalerkinSystem sys;
  sys.k = m.k;
  sys.family = fam;
  sys.dim = n;
  sys.lambda.resize(n);
  for (int j = 0; j < n; ++j) {
    if (basis[j].point.family != fam) throw ConfigError("mixed families in basis");
    sys.lambda[j] = basis[j].point.lambda;
  }

  const int panels = std::max(cfg.quad_panels, 8 * n) + (std::max(cfg.quad_panels, 8 * n) % 2);
  const std::vector<double> w = simpson_weights(panels);
  const int pts = panels + 1;

  // Sample the normalized eigenfunctions and the potential once.
  std::vector<double> q(pts);
  for (int i = 0; i < pts; ++i) q[i] = qk(static_cast<double>(i) / panels);

  std::vector<std::vector<double>> y(n, std::vector<double>(pts));
  parallel_for(n, [&](int j) {
    const double c = std::sqrt(basis[j].c_squared);
    const Coeffs cf{basis[j].c1, Scaled{}};
    for (int i = 0; i < pts; ++i) {
      const double t = static_cast<double>(i) / panels;
      y[j][i] = c * eigenfunction_scaled(basis[j].point.z, t, m, cf).value();
    }
  });

  // Orthonormality guard: the quadrature Gram of the interior part plus the
  // boundary terms must match the identity, else the projection is invalid.
  const double g = m.gamma_alpha();
  const bool b1 = (fam == Family::Main);
  const bool b2 = (fam == Family::Main || fam == Family::L01);
  std::vector<double> end_y(n, 0.0), end_yp(n, 0.0);
  if (b2) {
    for (int j = 0; j < n; ++j) {
      const EndState s = end_state(basis[j].point.z, m, family_convention(fam));
      const double c = std::sqrt(basis[j].c_squared);
      end_y[j] = c * s.y.value();
      end_yp[j] = c * s.yp.value();
    }
  }
  const int gram_check = std::min(n, 6);
  for (int j = 0; j < gram_check; ++j)
    for (int l = j; l < gram_check; ++l) {
      double ip = kernels::weighted_dot(w.data(), y[j].data(), y[l].data(), pts);
      if (b2) ip += g * end_yp[j] * end_yp[l];
      if (b1) ip += g * end_y[j] * end_y[l];
      const double want = (j == l) ? 1.0 : 0.0;
      if (std::abs(ip - want) > 1e-6)
        throw NumericError("basis not orthonormal: Gram(" + std::to_string(j) + "," +
                           std::to_string(l) + ") = " + std::to_string(ip));
    }

  std::vector<double> qw(pts);
  for (int i = 0; i < pts; ++i) qw[i] = q[i] * w[i];

  sys.Q.resize(n, n);
  parallel_for(n, [&](int j) {
    for (int l = j; l < n; ++l) {
      const double v = kernels::weighted_dot(qw.data(), y[j].data(), y[l].data(), pts);
      sys.Q(j, l) = v;
      sys.Q(l, j) = v;
    }
  });
  return sys;
}

std::vector<double> perturbed_eigenvalues(const GalerkinSystem& sys) {
  Eigen::MatrixXd A = sys.Q;
  for (int j = 0; j < sys.dim; ++j) A(j, j) += sys.lambda[j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) throw NumericError("symmetric eigensolver failed");
  const int keep = (sys.dim + 1) / 2;
  std::vector<double> out(keep);
  for (int j = 0; j < keep; ++j) out[j] = es.eigenvalues()(j);
  return out;
}

namespace {

struct ShootState {
  // Two column solutions, each (y, y', y'', y''') — left conditions
  // y(0) = y''(0) = 0 with y'(0) = 1 resp. y'''(0) = 1.
  double a[4] = {0.0, 1.0, 0.0, 0.0};
  double b[4] = {0.0, 0.0, 0.0, 1.0};
};

void deriv(const double s[4], double rhs_coef, double out[4]) {
  out[0] = s[1];
  out[1] = s[2];
  out[2] = s[3];
  out[3] = rhs_coef * s[0];
}

void rk4_step(double s[4], double t, double h,
              const std::function<double(double)>& coef) {
  double k1[4], k2[4], k3[4], k4[4], tmp[4];
  deriv(s, coef(t), k1);
  for (int i = 0; i < 4; ++i) tmp[i] = s[i] + 0.5 * h * k1[i];
  deriv(tmp, coef(t + 0.5 * h), k2);
  for (int i = 0; i < 4; ++i) tmp[i] = s[i] + 0.5 * h * k2[i];
  deriv(tmp, coef(t + 0.5 * h), k3);
  for (int i = 0; i < 4; ++i) tmp[i] = s[i] + h * k3[i];
  deriv(tmp, coef(t + h), k4);
  for (int i = 0; i < 4; ++i) s[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

double norm4(const double s[4]) {
  return std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3]);
}

// Boundary rows of the family at the right end, applied to one column.
void boundary_rows(const ModeSpec& m, Family fam, double mu, const double s[4],
                   double out[2]) {
  const double lg = mu * m.gamma_alpha();
  switch (fam) {
    case Family::Main:
      out[0] = -s[3] - lg * s[0];
      out[1] = s[2] - lg * s[1];
      break;
    case Family::L01:
      out[0] = s[0];
      out[1] = s[2] - lg * s[1];
      break;
    case Family::L02:
      out[0] = s[0];
      out[1] = s[1];
      break;
    case Family::L03:
    default:
      out[0] = s[0];
      out[1] = s[2];
      break;
  }
}

}  // namespace

double shooting_det(const ModeSpec& m, Family fam,
                    const std::function<double(double)>& qk, double mu, int steps) {
  const auto coef = [&](double t) { return mu - m.gamma - qk(t); };
  ShootState st;
  const double h = 1.0 / steps;
  double log_scale = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * h;
    rk4_step(st.a, t, h, coef);
    rk4_step(st.b, t, h, coef);
    // Rescale both columns by a common positive factor; the determinant
    // sign survives and overflow from the sh(z t)-type growth does not.
    const double s = std::max(norm4(st.a), norm4(st.b));
    if (s > 1e8) {
      for (int c = 0; c < 4; ++c) {
        st.a[c] /= s;
        st.b[c] /= s;
      }
      log_scale += std::log(s);
    }
    // Fight column collinearity: subtract the a-projection from b.  The
    // shear leaves the determinant of any 2x2 row pair unchanged.
    const double na2 = st.a[0] * st.a[0] + st.a[1] * st.a[1] + st.a[2] * st.a[2] +
                       st.a[3] * st.a[3];
    if (na2 > 0.0) {
      const double proj = (st.a[0] * st.b[0] + st.a[1] * st.b[1] + st.a[2] * st.b[2] +
                           st.a[3] * st.b[3]) /
                          na2;
      for (int c = 0; c < 4; ++c) st.b[c] -= proj * st.a[c];
    }
  }
  double ra[2], rb[2];
  boundary_rows(m, fam, mu, st.a, ra);
  boundary_rows(m, fam, mu, st.b, rb);
  double det = ra[0] * rb[1] - ra[1] * rb[0];
  // Normalize to a bounded quantity so the scan thresholds are meaningful.
  const double mag = std::abs(ra[0]) + std::abs(ra[1]) + std::abs(rb[0]) + std::abs(rb[1]);
  if (mag > 0.0) det /= mag * mag;
  (void)log_scale;
  return det;
}

std::vector<double> shooting_eigenvalues(const ModeSpec& m, Family fam,
                                         const std::function<double(double)>& qk,
                                         double w_lo, double w_hi,
                                         const SolverConfig& cfg) {
  if (!(w_hi > w_lo) || w_lo < 0.0) throw ConfigError("bad shooting window");
  const int steps = cfg.rk4_steps;
  const auto det_at_w = [&](double w, int nst) {
    return shooting_det(m, fam, qk, m.gamma + w * w * w * w, nst);
  };

  std::vector<double> out;
  const double dw = 0.05;
  double prev_w = w_lo + 1e-9;
  double prev_d = det_at_w(prev_w, steps);
  for (double w = prev_w + dw; w <= w_hi + 1e-12; w += dw) {
    const double d = det_at_w(w, steps);
    if (prev_d == 0.0 || (prev_d < 0.0) != (d < 0.0)) {
      double lo = prev_w, hi = w, dlo = prev_d;
      for (int it = 0; it < 80 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double dm = det_at_w(mid, steps);
        if (dm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((dm < 0.0) == (dlo < 0.0)) {
          lo = mid;
          dlo = dm;
        } else {
          hi = mid;
        }
      }
      const double wr = 0.5 * (lo + hi);
      const double mu = m.gamma + wr * wr * wr * wr;

      // Step-halving consistency: re-bisect locally with 2x steps and
      // compare the eigenvalue, not the determinant.
      double lo2 = std::max(w_lo, wr - dw), hi2 = wr + dw;
      double dl2 = det_at_w(lo2, 2 * steps);
      double dh2 = det_at_w(hi2, 2 * steps);
      if ((dl2 < 0.0) == (dh2 < 0.0))
        throw NumericError("shooting refinement lost the sign change near mu = " +
                           std::to_string(mu));
      for (int it = 0; it < 80 && hi2 - lo2 > 1e-13 * (1.0 + hi2); ++it) {
        const double mid = 0.5 * (lo2 + hi2);
        const double dm = det_at_w(mid, 2 * steps);
        if (dm == 0.0) {
          lo2 = hi2 = mid;
          break;
        }
        if ((dm < 0.0) == (dl2 < 0.0)) {
          lo2 = mid;
          dl2 = dm;
        } else {
          hi2 = mid;
        }
      }
      const double wr2 = 0.5 * (lo2 + hi2);
      const double mu2 = m.gamma + wr2 * wr2 * wr2 * wr2;
      if (std::abs(mu2 - mu) > 1e-5 * (1.0 + std::abs(mu)))
        throw NumericError("shooting step-halving disagreement at mu = " +
                           std::to_string(mu) + " vs " + std::to_string(mu2));
      out.push_back(mu2);
    }
    prev_w = w;
    prev_d = d;
  }
  return out;
}

}  // namespace qt
