#pragma once

#include <functional>
#include <span>
#include <vector>

#include "diffract/comb.hpp"
#include "diffract/family.hpp"
#include "diffract/geometry.hpp"
#include "diffract/report.hpp"

namespace diffract {

using FnD = std::function<complexd(const Point&)>;
using Fn1 = std::function<complexd(double)>;

FnD lift(const Fn1& f);

struct QuadratureOptions {
  double step = 1e-3;  // composite midpoint step per axis
};

/// One pass over a window: the plain mean, |f|^p mean, and the windowed
/// Fourier-Bohr integrals (1/|A|) int_A f(t) e^{-2 pi i k t} dt for each
/// requested frequency. d = 1 keeps per-frequency phase rotators so the cost
/// per grid point is one multiply-add per frequency.
struct WindowIntegrals {
  complexd mean{};
  double mean_abs_p = 0.0;
  std::vector<complexd> fb;
};

WindowIntegrals window_integrals(const FnD& f, int dim, const BoxWindow& A,
                                 std::span<const Point> freqs, double p,
                                 const QuadratureOptions& quad = {});

/// (1/|A|) int_A f, composite midpoint.
complexd window_mean_fn(const FnD& f, int dim, const BoxWindow& A,
                        const QuadratureOptions& quad = {});

/// M_A(f): mean of a sampled function along a van Hove family.
ConvergenceReport mean_along(const FnD& f, int dim, const VanHoveFamily& fam,
                             const NRange& ns, const QuadratureOptions& quad = {},
                             const ConvergenceOptions& conv = {});

/// M_A(mu): atom mass over window volume along the family.
ConvergenceReport mean_along(const WeightedDiracComb& mu,
                             const VanHoveFamily& fam, const NRange& ns,
                             const ConvergenceOptions& conv = {});

/// Per-n estimates of the Besicovitch seminorm ||f||_{b,p,A}: the p-th root of
/// the windowed |f|^p mean. The limsup realisation of an oscillating report is
/// ConvergenceReport::limsup_real().
ConvergenceReport besicovitch_seminorm(const FnD& f, int dim, double p,
                                       const VanHoveFamily& fam, const NRange& ns,
                                       const QuadratureOptions& quad = {},
                                       const ConvergenceOptions& conv = {});

/// Deterministic shift grid: `equispaced` shifts in [0, period_hint] plus
/// `random_count` seeded uniform draws from [-span/2, span/2].
struct ShiftGrid {
  std::vector<Point> shifts;

  static ShiftGrid explicit_shifts(std::vector<double> xs);
  static ShiftGrid standard(double period_hint, double span, int equispaced = 64,
                            int random_count = 64, unsigned long seed = 1);
};

/// Per-n estimates of the Weyl seminorm ||f||_{w,p,A}: the sup over the shift
/// grid of the shifted-window seminorm. A grid sup is a lower bound of the
/// true sup over G.
ConvergenceReport weyl_seminorm(const FnD& f, int dim, double p,
                                const VanHoveFamily& fam, const NRange& ns,
                                const ShiftGrid& shifts,
                                const QuadratureOptions& quad = {},
                                const ConvergenceOptions& conv = {});

/// Desk-scale test of the equivalence (uniform shifted means along one family)
/// <=> (means along every family, same limit): each family's shifted means
/// must converge and all limits must agree.
struct AmenabilityFamilyResult {
  std::string family;
  bool all_converged = false;
  double shift_spread = 0.0;  // spread of per-shift limits
  complexd limit{};
  std::vector<ConvergenceReport> per_shift;
};

struct AmenabilityReport {
  bool amenable = false;
  double limit_spread = 0.0;  // spread across families
  std::vector<AmenabilityFamilyResult> families;
};

AmenabilityReport amenability_check(const FnD& f, int dim,
                                    const std::vector<VanHoveFamily>& families,
                                    const ShiftGrid& shifts, const NRange& ns,
                                    double tol = 1e-2,
                                    const QuadratureOptions& quad = {},
                                    const ConvergenceOptions& conv = {});

/// If every shifted A-average of f lies in U_r(z) for one fixed window A, then
/// along any van Hove family the shifted averages eventually lie in U_R(z),
/// R > r. Reports the first tested n from which that holds per family.
struct EnlargedBallFamilyResult {
  std::string family;
  long first_good_n = -1;  // -1: never within the tested range
  bool ok = false;
};

struct EnlargedBallReport {
  bool base_ok = false;
  double base_worst = 0.0;  // max |average - z| over base shifts
  std::vector<EnlargedBallFamilyResult> families;
};

EnlargedBallReport enlarged_ball_check(const FnD& f, int dim, const BoxWindow& A,
                                       complexd z, double r, double R,
                                       const std::vector<VanHoveFamily>& families,
                                       const ShiftGrid& shifts, const NRange& ns,
                                       const QuadratureOptions& quad = {});

}  // namespace diffract
