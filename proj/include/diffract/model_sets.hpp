#pragma once

#include <array>
#include <functional>
#include <string>

#include "diffract/comb.hpp"
#include "diffract/family.hpp"
#include "diffract/report.hpp"
#include "diffract/spectrum.hpp"

namespace diffract {

/// A cut-and-project scheme with 1-dimensional physical and internal spaces:
/// the lattice is spanned by the rows of `basis` inside R (physical) x R
/// (internal), and points project to the physical line when their internal
/// coordinate falls in the half-open window [win_lo, win_hi).
struct CutProjectScheme {
  std::array<std::array<double, 2>, 2> basis{};  // rows are lattice generators
  double win_lo = 0.0;
  double win_hi = 1.0;

  CutProjectScheme(std::array<std::array<double, 2>, 2> b, double lo, double hi);

  double det() const;
  double lattice_density() const;  // dens(L) = 1 / |det|
  double window_length() const { return win_hi - win_lo; }
  /// Closed-form density of the model set, dens(L) * |W|.
  double model_set_density() const;

  /// Rows generate the annihilator of the lattice under the e^{2 pi i <.,.>}
  /// pairing: the inverse transpose of `basis`.
  std::array<std::array<double, 2>, 2> dual_basis() const;

  CutProjectScheme with_window(double lo, double hi) const;

  static CutProjectScheme fibonacci();
  static CutProjectScheme identity(double lo = -0.5, double hi = 0.5);
};

/// All lattice points with physical coordinate in [lo-pad, hi+pad) and
/// internal coordinate in the window, as a unit-weight comb. The coefficient
/// enumeration box comes from mapping the region corners through the inverse
/// basis, so no point is missed.
WeightedDiracComb generate_model_set(const CutProjectScheme& cps, double phys_lo,
                                     double phys_hi, double pad = 2.0);

/// omega_h = sum h(x*) delta_x for a compactly supported internal weight h.
WeightedDiracComb generate_weighted_comb(const CutProjectScheme& cps,
                                         const std::function<double(double)>& h,
                                         double h_lo, double h_hi, double phys_lo,
                                         double phys_hi, double pad = 2.0);

struct DensityCheckResult {
  ConvergenceReport report;
  double dens_closed = 0.0;
  bool maximal = false;
};

/// Measures the density of the generated comb along the family and compares
/// it with dens(L) |W|.
DensityCheckResult density_check(const CutProjectScheme& cps,
                                 const WeightedDiracComb& comb,
                                 const VanHoveFamily& fam, const NRange& ns,
                                 double tol = 1e-2);

/// 1_W-check transform: int_W e^{2 pi i y u} du, with value |W| at y = 0.
complexd window_ft(double win_lo, double win_hi, double y);

/// Overlap |W intersect (shift + W)|, the closed form of 1_W * reflected 1_W.
double window_overlap(double win_lo, double win_hi, double shift);

/// Closed-form Bragg spectrum: every dual lattice point (k, k_int) with
/// |k| <= k_max contributes a_k = dens(L) 1_W-check(k_int) and intensity
/// |a_k|^2; rows below intensity_floor are dropped. Rows are sorted by k.
SpectrumTable bragg_spectrum(const CutProjectScheme& cps, double k_max,
                             double intensity_floor);

/// Internal coordinate of the lattice point whose physical coordinate is x
/// (within match_tol), searched over |internal| <= internal_bound.
double star_map(const CutProjectScheme& cps, double x,
                double internal_bound = 100.0, double match_tol = kMatchTol);

}  // namespace diffract
