#pragma once

#include <string>
#include <vector>

#include "diffract/averaging.hpp"
#include "diffract/comb.hpp"
#include "diffract/family.hpp"
#include "diffract/report.hpp"

namespace diffract {

/// Finite-n autocorrelation gamma_n = (1/|A_n|) mu|_{A_n} * reflected
/// conjugate of mu|_{A_n}: a comb on the difference set with coefficients
/// eta(z). Both factors are restricted to A_n, so pairs with one leg outside
/// the window are lost; `boundary_loss_bound` reports |d^K A_n| / |A_n| for
/// K = [-z_max, z_max]^d, which bounds that loss for unit-size weights.
struct Autocorrelation {
  WeightedDiracComb diffs;  // atoms z with weights eta(z)
  std::string family;
  long n = 0;
  double cluster_tol = 1e-6;
  double z_max = 0.0;
  double boundary_loss_bound = 0.0;

  complexd eta(const Point& z, double tol = kMatchTol) const;
  complexd eta(double z, double tol = kMatchTol) const { return eta(Point{z}, tol); }

  /// max |eta(-z) - conj(eta(z))| over the support.
  double hermitian_defect() const;
};

struct AutocorrOptions {
  double cluster_tol = 1e-6;
  double z_max = 50.0;
};

/// Sorted pair sweep over mu restricted to A_n, differences merged within
/// cluster_tol and truncated to |z| <= z_max.
Autocorrelation autocorrelation(const WeightedDiracComb& mu,
                                const VanHoveFamily& fam, long n,
                                const AutocorrOptions& opt = {});

/// Estimates of #(Lambda intersect (z + Lambda) intersect A_n) / |A_n|.
ConvergenceReport pair_correlation(const WeightedDiracComb& lambda,
                                   const Point& z, const VanHoveFamily& fam,
                                   const NRange& ns,
                                   const ConvergenceOptions& conv = {},
                                   double match_tol = kMatchTol);

/// Eberlein convolution of sampled functions,
///   (f (*) g)(t) = M_A(f g(t - .)),
/// evaluated on a grid of t values; one ConvergenceReport per t.
struct EberleinResult {
  std::vector<Point> t_grid;
  std::vector<ConvergenceReport> reports;
  std::vector<complexd> limits;  // report.value() per t
};

EberleinResult eberlein_fn(const FnD& f, const FnD& g, int dim,
                           const VanHoveFamily& fam, const NRange& ns,
                           const std::vector<Point>& t_grid,
                           const QuadratureOptions& quad = {},
                           const ConvergenceOptions& conv = {});

/// Closed form of (phi * reflected phi)(z) for a tent of halfwidth w, per
/// axis: with u = |z|/w,
///   w (2/3 - u^2 + u^3/2)   for u <= 1,
///   w (2-u)^3 / 6           for 1 <= u <= 2,
///   0                        beyond.
double tent_self_convolution(double w, double z);
double tent_self_convolution(const TentFunction& phi, const Point& z);

}  // namespace diffract
