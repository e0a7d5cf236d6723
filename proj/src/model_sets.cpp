#include "diffract/model_sets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diffract/averaging.hpp"

namespace diffract {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct CoeffBox {
  long m_lo, m_hi, n_lo, n_hi;
};

// Integer coefficient bounds for all lattice points of `basis` that land in
// box_x x box_y: map the four corners through the inverse and round outward.
CoeffBox coefficient_bounds(const std::array<std::array<double, 2>, 2>& basis,
                            double x_lo, double x_hi, double y_lo, double y_hi) {
  const double det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
  if (std::abs(det) < 1e-12) throw DegenerateBasis("lattice basis is singular");
  // (m, n) = (x, y) B^{-1} for row-vector coordinates.
  const double i00 = basis[1][1] / det, i01 = -basis[0][1] / det;
  const double i10 = -basis[1][0] / det, i11 = basis[0][0] / det;
  double m_min = INFINITY, m_max = -INFINITY, n_min = INFINITY, n_max = -INFINITY;
  for (double x : {x_lo, x_hi}) {
    for (double y : {y_lo, y_hi}) {
      const double m = x * i00 + y * i10;
      const double n = x * i01 + y * i11;
      m_min = std::min(m_min, m);
      m_max = std::max(m_max, m);
      n_min = std::min(n_min, n);
      n_max = std::max(n_max, n);
    }
  }
  return CoeffBox{static_cast<long>(std::floor(m_min)) - 1,
                  static_cast<long>(std::ceil(m_max)) + 1,
                  static_cast<long>(std::floor(n_min)) - 1,
                  static_cast<long>(std::ceil(n_max)) + 1};
}

}  // namespace

CutProjectScheme::CutProjectScheme(std::array<std::array<double, 2>, 2> b,
                                   double lo, double hi)
    : basis(b), win_lo(lo), win_hi(hi) {
  if (!(win_lo < win_hi))
    throw std::invalid_argument("CutProjectScheme: empty window");
  if (std::abs(det()) < 1e-12)
    throw DegenerateBasis("CutProjectScheme: singular basis");
}

double CutProjectScheme::det() const {
  return basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
}

double CutProjectScheme::lattice_density() const { return 1.0 / std::abs(det()); }

double CutProjectScheme::model_set_density() const {
  return lattice_density() * window_length();
}

std::array<std::array<double, 2>, 2> CutProjectScheme::dual_basis() const {
  const double d = det();
  // inverse transpose of the row-generator matrix
  return {{{basis[1][1] / d, -basis[1][0] / d},
           {-basis[0][1] / d, basis[0][0] / d}}};
}

CutProjectScheme CutProjectScheme::with_window(double lo, double hi) const {
  return CutProjectScheme(basis, lo, hi);
}

CutProjectScheme CutProjectScheme::fibonacci() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double phi_conj = (1.0 - std::sqrt(5.0)) / 2.0;
  return CutProjectScheme({{{1.0, 1.0}, {phi, phi_conj}}}, -1.0, phi - 1.0);
}

CutProjectScheme CutProjectScheme::identity(double lo, double hi) {
  return CutProjectScheme({{{1.0, 0.0}, {0.0, 1.0}}}, lo, hi);
}

WeightedDiracComb generate_weighted_comb(const CutProjectScheme& cps,
                                         const std::function<double(double)>& h,
                                         double h_lo, double h_hi, double phys_lo,
                                         double phys_hi, double pad) {
  if (!(phys_lo < phys_hi))
    throw std::invalid_argument("generate_weighted_comb: empty physical region");
  const double x_lo = phys_lo - pad, x_hi = phys_hi + pad;
  const CoeffBox cb = coefficient_bounds(cps.basis, x_lo, x_hi, h_lo, h_hi);

  std::vector<Point> pts;
  std::vector<complexd> ws;
  for (long m = cb.m_lo; m <= cb.m_hi; ++m) {
    for (long n = cb.n_lo; n <= cb.n_hi; ++n) {
      const double x = m * cps.basis[0][0] + n * cps.basis[1][0];
      const double y = m * cps.basis[0][1] + n * cps.basis[1][1];
      if (x < x_lo || x >= x_hi) continue;
      if (y < h_lo || y >= h_hi) continue;
      const double w = h(y);
      if (w == 0.0) continue;
      pts.push_back(Point{x});
      ws.push_back(complexd{w, 0.0});
    }
  }

  // Injectivity witness before construction: two kept lattice points sharing a
  // physical coordinate mean the projection is not one-to-one over this region.
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pts[a][0] < pts[b][0]; });
  double gap = INFINITY;
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    gap = std::min(gap, pts[order[i + 1]][0] - pts[order[i]][0]);
  if (!(gap > kMatchTol))
    throw DegenerateBasis(
        "generate_weighted_comb: physical projection is not injective on the "
        "working region");
  return WeightedDiracComb(1, std::move(pts), std::move(ws),
                           BoxWindow::interval(x_lo, x_hi),
                           std::isfinite(gap) ? std::optional<double>(gap)
                                              : std::nullopt);
}

WeightedDiracComb generate_model_set(const CutProjectScheme& cps, double phys_lo,
                                     double phys_hi, double pad) {
  return generate_weighted_comb(
      cps, [](double) { return 1.0; }, cps.win_lo, cps.win_hi, phys_lo, phys_hi,
      pad);
}

DensityCheckResult density_check(const CutProjectScheme& cps,
                                 const WeightedDiracComb& comb,
                                 const VanHoveFamily& fam, const NRange& ns,
                                 double tol) {
  DensityCheckResult out;
  out.report = mean_along(comb, fam, ns);
  out.dens_closed = cps.model_set_density();
  out.maximal = out.report.converged() &&
                std::abs(out.report.limit - complexd{out.dens_closed, 0.0}) < tol;
  return out;
}

complexd window_ft(double win_lo, double win_hi, double y) {
  if (y == 0.0) return complexd{win_hi - win_lo, 0.0};
  const complexd two_pi_iy{0.0, kTwoPi * y};
  return (std::exp(two_pi_iy * win_hi) - std::exp(two_pi_iy * win_lo)) / two_pi_iy;
}

double window_overlap(double win_lo, double win_hi, double shift) {
  const double lo = std::max(win_lo, win_lo + shift);
  const double hi = std::min(win_hi, win_hi + shift);
  return std::max(0.0, hi - lo);
}

SpectrumTable bragg_spectrum(const CutProjectScheme& cps, double k_max,
                             double intensity_floor) {
  if (!(k_max >= 0.0) || !(intensity_floor > 0.0))
    throw std::invalid_argument("bragg_spectrum: need k_max >= 0, floor > 0");
  const double dens = cps.lattice_density();
  // |1_W-check(y)| <= min(|W|, 1/(pi |y|)); intensities below the floor need
  // |y| beyond dens / (pi sqrt(floor)).
  const double y_max =
      std::max(1.0, dens / (std::numbers::pi * std::sqrt(intensity_floor))) * 1.01;
  const auto dual = cps.dual_basis();
  const CoeffBox cb = coefficient_bounds(dual, -k_max, k_max, -y_max, y_max);

  SpectrumTable table;
  table.pass = true;
  for (long m = cb.m_lo; m <= cb.m_hi; ++m) {
    for (long n = cb.n_lo; n <= cb.n_hi; ++n) {
      const double k = m * dual[0][0] + n * dual[1][0];
      const double k_int = m * dual[0][1] + n * dual[1][1];
      if (std::abs(k) > k_max || std::abs(k_int) > y_max) continue;
      SpectrumRow row;
      row.freq = Point{k};
      row.a = dens * window_ft(cps.win_lo, cps.win_hi, k_int);
      row.intensity = std::norm(row.a);
      if (row.intensity < intensity_floor) continue;
      row.cpp_residual = 0.0;  // exact by construction
      row.status = "closed-form";
      table.rows.push_back(row);
    }
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const SpectrumRow& a, const SpectrumRow& b) {
              return a.freq[0] < b.freq[0];
            });
  return table;
}

double star_map(const CutProjectScheme& cps, double x, double internal_bound,
                double match_tol) {
  const CoeffBox cb = coefficient_bounds(cps.basis, x - 1.0, x + 1.0,
                                         -internal_bound, internal_bound);
  // For an honest CPS the hit is unique; schemes with a non-injective
  // projection resolve to the smallest internal coordinate.
  double best = INFINITY;
  for (long m = cb.m_lo; m <= cb.m_hi; ++m) {
    for (long n = cb.n_lo; n <= cb.n_hi; ++n) {
      const double px = m * cps.basis[0][0] + n * cps.basis[1][0];
      if (std::abs(px - x) > match_tol) continue;
      const double py = m * cps.basis[0][1] + n * cps.basis[1][1];
      if (std::abs(py) < std::abs(best)) best = py;
    }
  }
  if (std::isfinite(best) && std::abs(best) <= internal_bound) return best;
  throw NotALatticePoint(
      "star_map: no lattice point with this physical coordinate within the "
      "internal bound");
}

}  // namespace diffract
