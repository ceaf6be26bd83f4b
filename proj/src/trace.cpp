#include <quarttrace/trace.hpp>

#include <algorithm>
#include <cmath>

#include <quarttrace/errors.hpp>
#include <quarttrace/parallel.hpp>

namespace qt {

namespace {

double simpson01(const std::function<double(double)>& f, int panels) {
  const double h = 1.0 / panels;
  double s = f(0.0) + f(1.0);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

}  // namespace

double first_order_shift(const ModeSpec& m, const NormedEigenpair& pair,
                         const std::function<double(double)>& qk, int panels) {
  const Coeffs cf{pair.c1, Scaled{}};
  const double num = simpson01(
      [&](double t) {
        const double y = eigenfunction_scaled(pair.point.z, t, m, cf).value();
        return qk(t) * y * y;
      },
      panels);
  return pair.c_squared * num;
}

TraceLadder galerkin_trace(const ModeSpec& m, Family fam,
                           const std::function<double(double)>& qk,
                           const SolverConfig& cfg) {
  const auto pts = locate_roots(m, fam, cfg.galerkin_dim, cfg);
  const auto basis = normalize_all(m, pts);
  const GalerkinSystem sys = assemble(m, fam, qk, basis, cfg);
  const std::vector<double> mu = perturbed_eigenvalues(sys);

  TraceLadder out;
  out.depths = cfg.ladder;
  if (out.depths.back() > static_cast<int>(mu.size()))
    throw ConfigError("ladder depth exceeds the trusted half of the projection");

  double run = 0.0;
  int next = 0;
  for (int j = 0; j < static_cast<int>(mu.size()); ++j) {
    const double gap_lo = (j > 0) ? sys.lambda[j] - sys.lambda[j - 1]
                                  : sys.lambda[1] - sys.lambda[0];
    if (std::abs(mu[j] - sys.lambda[j]) > 0.5 * gap_lo)
      throw NumericError("perturbed/unperturbed pairing misaligned at index " +
                         std::to_string(j));
    run += mu[j] - sys.lambda[j];
    while (next < static_cast<int>(out.depths.size()) && out.depths[next] == j + 1) {
      out.partial.push_back(run);
      ++next;
    }
  }
  if (out.partial.size() != out.depths.size())
    throw ConfigError("ladder depth exceeds located roots");
  out.extrapolated = out.partial.back();
  out.uncertainty = out.partial.size() > 1
                        ? std::abs(out.partial.back() - out.partial[out.partial.size() - 2])
                        : 0.0;
  return out;
}

double hinged_target(double q0, double q1) { return -(q0 + q1) / 4.0; }
double clamped_target(double q0, double q1) { return -q0 / 4.0 - q1 / 2.0; }

TraceLadder first_order_series(const ModeSpec& m, Family fam,
                               const std::function<double(double)>& qk,
                               const SolverConfig& cfg) {
  TraceLadder out;
  out.depths = cfg.ladder;
  const int j_max = out.depths.empty() ? cfg.roots_per_mode : out.depths.back();

  const std::vector<SpectralPoint> pts = locate_roots(m, fam, j_max, cfg);
  const std::vector<NormedEigenpair> pairs = normalize_all(m, pts);

  std::vector<double> shift(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), [&](int i) {
    shift[i] = first_order_shift(m, pairs[i], qk, cfg.quad_panels);
  });

  if (cfg.include_small_roots) {
    for (const SpectralPoint& p : small_root_scan(m, fam, cfg))
      out.small_contribution += first_order_shift(m, normalize(m, p), qk, cfg.quad_panels);
    for (const DiagonalPoint& p : diag_root_scan(m, fam, 5.0, cfg))
      out.diagonal_contribution += diag_first_order(m, p, qk, cfg.quad_panels);
  }

  const double base = out.small_contribution + out.diagonal_contribution;
  double run = base;
  int next = 0;
  for (int j = 0; j < static_cast<int>(shift.size()); ++j) {
    run += shift[j];
    while (next < static_cast<int>(out.depths.size()) && out.depths[next] == j + 1) {
      out.partial.push_back(run);
      ++next;
    }
  }
  if (out.partial.size() != out.depths.size())
    throw ConfigError("ladder depth exceeds located roots");

  out.extrapolated = out.partial.back();
  out.uncertainty = out.partial.size() > 1
                        ? std::abs(out.partial.back() - out.partial[out.partial.size() - 2])
                        : 0.0;
  return out;
}

ChainReport chain_compare(const ModeSpec& m, const std::function<double(double)>& qk,
                          const SolverConfig& cfg) {
  ChainReport rep;
  const Family order[4] = {Family::Main, Family::L01, Family::L02, Family::L03};

  SolverConfig sub = cfg;
  sub.include_small_roots = true;  // the clamped-like totals require the full set

  for (Family fam : order) {
    FamilyTrace ft;
    ft.family = fam;
    try {
      ft.ladder = first_order_series(m, fam, qk, sub);
      ft.total = ft.ladder.extrapolated;
    } catch (const NumericError& e) {
      ft.failure = e.what();
      rep.failures.push_back(std::string(family_name(fam)) + ": " + e.what());
    }
    rep.families.push_back(std::move(ft));
  }

  const double q0 = qk(0.0), q1 = qk(1.0);
  rep.hinged_closed = hinged_target(q0, q1);
  rep.clamped_closed = clamped_target(q0, q1);

  bool ok = rep.failures.empty();
  if (ok) {
    double lo = rep.families[0].total, hi = lo;
    for (int i = 1; i < 3; ++i) {
      lo = std::min(lo, rep.families[i].total);
      hi = std::max(hi, rep.families[i].total);
    }
    rep.spread = hi - lo;
    rep.hinged_total = rep.families[3].total;

    rep.increments_shrink = true;
    for (const FamilyTrace& ft : rep.families) {
      const auto& p = ft.ladder.partial;
      for (size_t i = 2; i < p.size(); ++i)
        if (std::abs(p[i] - p[i - 1]) > std::abs(p[i - 1] - p[i - 2]) + 1e-9)
          rep.increments_shrink = false;
    }

    if (rep.spread > cfg.chain_tol)
      rep.failures.push_back("clamped-like spread " + std::to_string(rep.spread) +
                             " exceeds tolerance");
    if (std::abs(rep.hinged_total - rep.hinged_closed) > 5e-3)
      rep.failures.push_back("hinged total " + std::to_string(rep.hinged_total) +
                             " misses closed form " + std::to_string(rep.hinged_closed));
    if (!rep.increments_shrink) rep.failures.push_back("ladder increments not shrinking");
    ok = rep.failures.empty();
  }
  rep.pass = ok;
  return rep;
}

ResidueSeriesReport residue_series_check(const ModeSpec& m,
                                         const std::function<double(double)>& qk,
                                         const SolverConfig& cfg) {
  SolverConfig sub = cfg;
  sub.include_small_roots = true;

  const int j_max = sub.ladder.empty() ? sub.roots_per_mode : sub.ladder.back();
  const auto zs = locate_roots(m, Family::Main, j_max, sub);
  const auto bs = locate_roots(m, Family::L01, j_max, sub);
  for (const auto& a : zs)
    for (const auto& b : bs)
      if (std::abs(a.z - b.z) < 1e-6)
        throw PoleError("coinciding poles: z-root and companion root both near " +
                        std::to_string(a.z));

  ResidueSeriesReport rep;
  const TraceLadder lm = first_order_series(m, Family::Main, qk, sub);
  const TraceLadder lc = first_order_series(m, Family::L01, qk, sub);
  rep.depths = lm.depths;
  rep.main_partials = lm.partial;
  rep.companion_partials = lc.partial;
  rep.gap_decreases = true;
  for (size_t i = 0; i < lm.partial.size(); ++i) {
    rep.gap.push_back(std::abs(lm.partial[i] - lc.partial[i]));
    if (i > 0 && rep.gap[i] > rep.gap[i - 1] + 1e-9) rep.gap_decreases = false;
  }
  rep.final_gap = rep.gap.back();
  return rep;
}

}  // namespace qt
