#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffract/averaging.hpp"
#include "diffract/comb.hpp"
#include "diffract/correlation.hpp"
#include "diffract/family.hpp"
#include "diffract/report.hpp"

namespace diffract {

struct SpectrumRow {
  Point freq;
  complexd a{};            // Fourier-Bohr coefficient (estimate or closed form)
  double intensity = 0.0;  // diffraction point mass estimate at freq
  double cpp_residual = 0.0;
  std::string status;
};

struct SpectrumTable {
  std::vector<SpectrumRow> rows;
  bool pass = false;
  double tol = 0.0;
};

/// Windowed Fourier-Bohr coefficient of a comb:
///   (1/|A_n|) sum_{x in shift + A_n} w_x e^{-2 pi i k.x}.
ConvergenceReport fourier_bohr(const WeightedDiracComb& mu, const Point& k,
                               const VanHoveFamily& fam, const NRange& ns,
                               const Point& shift = Point{},
                               const ConvergenceOptions& conv = {});

/// Single-window coefficient (no limit detection).
complexd fourier_bohr_window(const WeightedDiracComb& mu, const Point& k,
                             const BoxWindow& A);

/// Uniform existence along the family: every shifted report must converge and
/// the per-shift limits must agree within tol.
struct UniformFBReport {
  std::vector<Point> shifts;
  std::vector<ConvergenceReport> reports;
  bool uniform = false;
  double spread = 0.0;
  complexd limit{};
};

UniformFBReport fourier_bohr_uniform(const WeightedDiracComb& mu, const Point& k,
                                     const VanHoveFamily& fam, const NRange& ns,
                                     const ShiftGrid& shifts, double tol = 1e-2,
                                     const ConvergenceOptions& conv = {});

/// Estimates the diffraction point mass gamma_hat({k}) as the Fourier-Bohr
/// coefficient of the (positive definite, translation bounded) autocorrelation
/// comb along windows B_m. Requires m_max <= z_max of the autocorrelation.
ConvergenceReport diffraction_intensity(const Autocorrelation& gamma,
                                        const Point& k,
                                        const VanHoveFamily& fam_b,
                                        const NRange& ms,
                                        const ConvergenceOptions& conv = {});

/// Real intensity from a report, clamped to 0 when within tol of negative.
/// Clamping events are flagged through `clamped`.
double intensity_value(const ConvergenceReport& rep, double tol,
                       bool* clamped = nullptr);

struct CppOptions {
  // Autocorrelation support half-width and intensity window bound. The
  // boundary-pair loss biases the intensity estimate by about m/(4n), so by
  // default both scale as n/50, clamped to [10, 100]. Zero means auto.
  double z_max = 0.0;
  long m_max = 0;
  double cluster_tol = 1e-6;
  int m_tail = 10;
  ConvergenceOptions conv{};
};

/// Consistent-phase-property check: per frequency, compare the intensity
/// estimate gamma_hat({k}) with |a_k|^2. Passes iff every residual < tol.
SpectrumTable cpp_check(const WeightedDiracComb& mu, const VanHoveFamily& fam,
                        const std::vector<Point>& freqs, long n, double tol,
                        const CppOptions& opt = {});

/// Finite-frequency-set Parseval test: deficit = M(|f|^2) - sum |a_k|^2 over
/// the declared set. Near-zero deficit is Besicovitch evidence; the deficit
/// quantifies the spectral mass the set misses.
struct ParsevalReport {
  double mean_sq = 0.0;
  double sum_sq = 0.0;
  double deficit = 0.0;
  std::vector<Point> freqs;
  std::vector<complexd> coefficients;
};

ParsevalReport parseval_check(const FnD& f, int dim, const VanHoveFamily& fam,
                              const std::vector<Point>& freq_set, long n,
                              const QuadratureOptions& quad = {});

/// Local maxima of |windowed FB coefficient| above `threshold` on the scan
/// grid, each refined by ternary search on the smooth exponential sum.
std::vector<double> peak_scan(const WeightedDiracComb& mu,
                              const VanHoveFamily& fam, double k_lo, double k_hi,
                              double k_step, long n, double threshold);

}  // namespace diffract
