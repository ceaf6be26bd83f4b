#include <quarttrace/asymptotics.hpp>

#include <algorithm>
#include <cmath>

#include <quarttrace/errors.hpp>

namespace qt {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ConfigError("slope fit needs >= 2 points");
  const int n = static_cast<int>(x.size());
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw NumericError("degenerate abscissae in slope fit");
  return sxy / sxx;
}

DriftReport root_drift(Family fam, int j, double alpha,
                       const std::vector<int>& ks, const SolverConfig& cfg) {
  DriftReport rep;
  const double target = M_PI * j + default_phase(fam);
  for (int k : ks) {
    const double gamma = 1.0 + std::pow(static_cast<double>(k), 4.0);
    ModeSpec m{1, gamma, alpha};
    const SpectralPoint p = bracket_and_refine(m, fam, j, target, cfg);
    rep.gammas.push_back(gamma);
    rep.offsets.push_back(std::abs(p.z - target));
  }
  rep.monotone_decreasing = true;
  for (size_t i = 1; i < rep.offsets.size(); ++i)
    if (rep.offsets[i] >= rep.offsets[i - 1]) rep.monotone_decreasing = false;
  rep.final_offset = rep.offsets.back();
  return rep;
}

long long hinged_count_exact(double lambda, double gamma) {
  if (lambda <= gamma) return 0;
  return static_cast<long long>(std::floor(std::pow(lambda - gamma, 0.25) / M_PI));
}

long long staircase_count(const std::vector<SpectralPoint>& pts, double lambda) {
  long long n = 0;
  for (const auto& p : pts)
    if (p.lambda <= lambda) ++n;
  return n;
}

SlopeGate aggregate_slope(const GammaLaw& law, double gate_width) {
  SlopeGate out;
  out.expected = 0.25 + 1.0 / law.exponent;

  const double lo = std::log(1e4), hi = std::log(std::pow(10.0, 5.5));
  std::vector<double> lx, ly;
  for (int i = 0; i < 12; ++i) {
    const double lam = std::exp(lo + (hi - lo) * i / 11.0);
    double count = 0.0;
    for (int j = 1;; ++j) {
      const double head = lam - std::pow(M_PI * j + M_PI / 4.0, 4.0) - law.base;
      if (head < law.scale) break;  // no k >= 1 fits on this branch
      count += std::floor(std::pow(head / law.scale, 1.0 / law.exponent));
    }
    if (count <= 0.0) throw NumericError("empty counting window");
    lx.push_back(std::log(lam));
    ly.push_back(std::log(count));
  }
  out.slope = fit_slope(lx, ly);
  out.within_gate = std::abs(out.slope - out.expected) <= gate_width;
  return out;
}

GrowthReport eigen_growth(const ModeSpec& m, Family fam, const SolverConfig& cfg) {
  const auto pts = locate_roots(m, fam, cfg.roots_per_mode, cfg);
  std::vector<double> lx, ly;
  // Fit only the upper half: the gamma offset bends the low end of the curve.
  for (size_t i = pts.size() / 2; i < pts.size(); ++i) {
    lx.push_back(std::log(static_cast<double>(pts[i].j)));
    ly.push_back(std::log(pts[i].lambda));
  }
  GrowthReport rep;
  rep.slope = fit_slope(lx, ly);
  rep.quartic = std::abs(rep.slope - 4.0) <= 0.1;
  return rep;
}

}  // namespace qt
