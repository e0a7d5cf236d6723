#pragma once

#include <complex>
#include <string>
#include <vector>

namespace diffract {

using complexd = std::complex<double>;

enum class ConvergenceStatus { converged, oscillating, undetermined };

std::string to_string(ConvergenceStatus s);

/// Knobs for limit detection on a finite estimate sequence. `tail` estimates
/// are inspected; they converge if their spread is below `tol`, and they
/// oscillate if they split into >= 2 clusters of diameter < tol separated by
/// at least `separation_factor * tol`.
struct ConvergenceOptions {
  int tail = 5;
  double tol = 1e-3;
  double separation_factor = 10.0;
};

/// Finite-n estimates of a mean together with a verdict about their limit.
/// The cluster heuristic that realises "limsup" numerically is an artifact
/// of this library, not a theorem; every consumer of an oscillating report
/// sees the detected clusters and can judge for itself.
struct ConvergenceReport {
  std::vector<long> n_values;
  std::vector<complexd> estimates;
  ConvergenceStatus status = ConvergenceStatus::undetermined;
  complexd limit{};                 // meaningful when converged
  std::vector<complexd> clusters;   // meaningful when oscillating, sorted
  double tail_spread = 0.0;         // max pairwise distance over the tail
  ConvergenceOptions options;

  /// Best single value: the limit when converged, otherwise the mean of the
  /// tail estimates.
  complexd value() const;

  /// limsup realisation for real-valued estimate sequences: the limit when
  /// converged, the largest cluster when oscillating, else the tail max.
  double limsup_real() const;

  bool converged() const { return status == ConvergenceStatus::converged; }
  bool oscillating() const { return status == ConvergenceStatus::oscillating; }
};

/// Runs cluster detection on the estimates and fills in the verdict fields.
ConvergenceReport detect_limit(std::vector<long> n_values,
                               std::vector<complexd> estimates,
                               const ConvergenceOptions& options = {});

/// The n values at which estimates are computed. Reports need a consecutive
/// tail so that parity-dependent families (alternating windows) show their
/// two clusters.
struct NRange {
  std::vector<long> values;

  static NRange consecutive(long lo, long hi);
  static NRange single(long n);
  /// A few geometrically spaced warm-up values followed by `tail` consecutive
  /// values ending at n_max.
  static NRange geometric_with_tail(long n_min, long n_max, int coarse = 6,
                                    int tail = 10);

  long max_n() const;
};

}  // namespace diffract
