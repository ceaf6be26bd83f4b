#pragma once

#include <functional>
#include <string>
#include <vector>

#include <quarttrace/norming.hpp>
#include <quarttrace/perturb.hpp>

namespace qt {

// Partial sums of the first-order eigenvalue shifts c_j^2 int q y_j^2 at
// the ladder depths, plus any below-branch contributions folded in.
struct TraceLadder {
  std::vector<int> depths;
  std::vector<double> partial;
  double small_contribution = 0.0;     // scan roots below the first branch seed
  double diagonal_contribution = 0.0;  // eigenvalues below gamma (z = a(1+i))
  double extrapolated = 0.0;           // deepest partial sum
  double uncertainty = 0.0;            // |last - previous| ladder increment
};

// First-order trace series for one mode and family.  Branch roots feed the
// ladder; when cfg.include_small_roots is set, sub-branch scan roots and
// diagonal-family eigenvalues are added as constant offsets (they sit below
// every ladder depth).
TraceLadder first_order_series(const ModeSpec& m, Family fam,
                               const std::function<double(double)>& qk,
                               const SolverConfig& cfg);

// Perturbation shift of one normalized eigenpair: c^2 int_0^1 q y^2 dt.
double first_order_shift(const ModeSpec& m, const NormedEigenpair& pair,
                         const std::function<double(double)>& qk, int panels);

// Trace ladder from the full Galerkin pipeline: perturbed eigenvalues of
// diag(lambda) + Q in a cfg.galerkin_dim branch-root basis, paired with the
// unperturbed ones index-wise (a pair further apart than half the local gap
// is an error).  Independent of the first-order series.
TraceLadder galerkin_trace(const ModeSpec& m, Family fam,
                           const std::function<double(double)>& qk,
                           const SolverConfig& cfg);

// Trace targets from the endpoint values of the potential:
//   hinged family (both endpoint rows free of the spectral parameter,
//   y(1) = y''(1) = 0):            -(q(0) + q(1)) / 4
//   the other three families:      -q(0)/4 - q(1)/2
double hinged_target(double q0, double q1);
double clamped_target(double q0, double q1);

struct FamilyTrace {
  Family family = Family::Main;
  TraceLadder ladder;
  double total = 0.0;
  std::string failure;  // empty when the series completed
};

struct ChainReport {
  std::vector<FamilyTrace> families;    // Main, L01, L02, L03
  double spread = 0.0;                  // max - min over the first three totals
  double hinged_total = 0.0;            // L03 total
  double hinged_closed = 0.0;           // -(q(0)+q(1))/4
  double clamped_closed = 0.0;          // -q(0)/4 - q(1)/2
  bool increments_shrink = false;
  bool pass = false;
  std::vector<std::string> failures;
};

// Cross-family consistency of the regularized trace for one mode: the
// three clamped-like families must agree within cfg.chain_tol, the hinged
// family must match its endpoint closed form, and the ladder increments
// must shrink.  A family whose series throws poisons the report instead of
// aborting the run.
ChainReport chain_compare(const ModeSpec& m, const std::function<double(double)>& qk,
                          const SolverConfig& cfg);

struct ResidueSeriesReport {
  std::vector<int> depths;
  std::vector<double> main_partials;
  std::vector<double> companion_partials;
  std::vector<double> gap;  // |main - companion| per depth
  bool gap_decreases = false;
  double final_gap = 0.0;
};

// The same trace computed from the two root sets entering the residue
// calculus (Main z-roots vs the y(1)=0 companion beta-roots); throws on a
// pole collision (a z-root and beta-root closer than 1e-6).
ResidueSeriesReport residue_series_check(const ModeSpec& m,
                                         const std::function<double(double)>& qk,
                                         const SolverConfig& cfg);

}  // namespace qt
