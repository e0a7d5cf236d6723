#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffract/averaging.hpp"
#include "diffract/comb.hpp"
#include "diffract/family.hpp"
#include "diffract/spectrum.hpp"

namespace diffract {

/// Result of scanning translation defect densities: for each t on the grid,
///   d(t) = #(Lambda Delta_U (t + Lambda)) intersect A_n / |A_n|,
/// where Delta_U discards points that have a partner within u_radius. The
/// t with d(t) < epsilon are the (empirical) almost periods.
struct MeanApReport {
  std::vector<double> t_values;
  std::vector<double> defect_density;
  std::vector<double> almost_periods;
  double epsilon = 0.0;
  double u_radius = 0.0;
  double max_gap = 0.0;   // over consecutive almost periods (0 if < 2 found)
  double min_gap = 0.0;
  double gap_bound = 0.0; // empirical relative-denseness bound used
  bool relatively_dense = false;
  long n = 0;
};

/// Defect density of a single translation.
double translation_defect_density(const WeightedDiracComb& lambda, const Point& t,
                                  double u_radius, const BoxWindow& A);

MeanApReport mean_ap_delone(const WeightedDiracComb& lambda, double u_radius,
                            double epsilon, const VanHoveFamily& fam, double t_lo,
                            double t_hi, double t_step, long n,
                            double gap_bound_factor = 3.0);

MeanApReport mean_ap_delone(const WeightedDiracComb& lambda, double u_radius,
                            double epsilon, const VanHoveFamily& fam,
                            const std::vector<double>& t_grid, long n,
                            double gap_bound_factor = 3.0);

/// Distinct atom differences of the comb in [0, t_max]: the only candidate
/// almost periods of a point set. Always contains 0.
std::vector<double> return_vectors(const WeightedDiracComb& comb, double t_max,
                                   double merge_tol = 1e-9);

/// Exact set difference (u_radius = match_tol) on an explicit t grid.
MeanApReport mean_ap_meyer(const WeightedDiracComb& lambda, double epsilon,
                           const VanHoveFamily& fam,
                           const std::vector<double>& t_grid, long n,
                           double gap_bound_factor = 3.0,
                           double match_tol = kMatchTol);

MeanApReport mean_ap_meyer(const WeightedDiracComb& lambda, double epsilon,
                           const VanHoveFamily& fam, double t_lo, double t_hi,
                           double t_step, long n, double gap_bound_factor = 3.0,
                           double match_tol = kMatchTol);

struct BesicovitchEvidence {
  double mean_sq = 0.0;
  double sum_sq = 0.0;
  double deficit = 0.0;
  double deficit_tol = 0.0;
  std::vector<Point> freqs;
  bool pass = false;
};

/// Besicovitch test at desk scale: Fourier-Bohr existence on the candidate
/// set, existence of M(|f|^2), and the Parseval deficit, for f = mu * phi.
BesicovitchEvidence besicovitch_classify(const WeightedDiracComb& mu,
                                         const TentFunction& phi,
                                         const VanHoveFamily& fam,
                                         const std::vector<Point>& freqs, long n,
                                         double deficit_tol = 1e-2,
                                         const QuadratureOptions& quad = {});

struct WeylEvidence {
  bool besicovitch_every_family = false;
  std::vector<double> family_deficits;
  bool fb_uniform = false;
  double fb_spread = 0.0;
  bool mean_sq_uniform = false;
  double mean_sq_spread = 0.0;
  bool pass = false;
};

struct MeanEvidence {
  std::size_t almost_periods_found = 0;
  double max_gap = 0.0;
  bool relatively_dense = false;
  bool pass = false;
};

enum class ApClass { weyl, besicovitch, mean, none, inconclusive };
std::string to_string(ApClass c);

/// Evidence tree plus the final verdict. The hierarchy Weyl => Besicovitch
/// => mean is enforced structurally: a verdict is only reported when every
/// weaker level also passed.
struct ApVerdict {
  MeanEvidence mean;
  BesicovitchEvidence besicovitch;     // along the primary family
  WeylEvidence weyl;
  ApClass verdict = ApClass::inconclusive;
  bool any_undetermined = false;
  std::string parameters;
};

struct ClassifyOptions {
  double deficit_tol = 1e-2;
  double uniform_tol = 5e-2;
  double mean_ap_epsilon = 0.35;
  double mean_ap_u_radius = 0.05;
  double t_max = 30.0;  // return vectors up to this length feed the mean scan
  QuadratureOptions quad{};
  /// n values for the uniformity probes (shifted Fourier-Bohr coefficients and
  /// shifted |mu * phi|^2 means). Uniform failures of sparse counterexamples
  /// only show at window scales comparable to their structure, so this range
  /// is independent of the Parseval scale n. Defaults to a geometric range up
  /// to n.
  std::optional<NRange> uniform_ns;
  ConvergenceOptions uniform_conv{};
};

ApVerdict weyl_classify(const WeightedDiracComb& mu, const TentFunction& phi,
                        const std::vector<VanHoveFamily>& families,
                        const ShiftGrid& shifts, const std::vector<Point>& freqs,
                        long n, const ClassifyOptions& opt = {});

}  // namespace diffract
