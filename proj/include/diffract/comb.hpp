#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "diffract/geometry.hpp"
#include "diffract/report.hpp"

namespace diffract {

/// chi_k(t) = exp(2 pi i k.t), the character of R^d at frequency k.
struct Character {
  int dim = 1;
  Point freq;

  Character() = default;
  Character(int d, Point k) : dim(d), freq(k) {}
  static Character at(double k) { return Character{1, Point{k}}; }

  complexd operator()(const Point& t) const;
};

/// phi(t) = prod_i max(0, 1 - |t_i - c_i| / w): the tent of halfwidth w > 0
/// centred at c. Support is c + [-w, w]^d and the total integral is w^d.
struct TentFunction {
  int dim = 1;
  double halfwidth = 1.0;
  Point center;

  TentFunction() = default;
  TentFunction(int d, double w, Point c = Point{});
  static TentFunction width(double w) { return TentFunction{1, w}; }

  double operator()(const Point& t) const;
  BoxWindow support() const;
  double integral() const;
};

/// Closed-form Fourier transform of a tent:
///   prod_i e^{-2 pi i k_i c_i} * w * (sin(pi k_i w) / (pi k_i w))^2,
/// continuous at k_i = 0 with per-axis value w.
complexd tent_fourier(const TentFunction& phi, const Point& k);
complexd tent_fourier(const TentFunction& phi, double k);

/// A translation bounded point measure mu = sum_x w_x delta_x with finitely
/// many atoms generated over a declared region. Atoms are kept sorted
/// lexicographically and must be pairwise distinct within match_tol.
///
/// Every consumer that reads atoms over a window first checks that the window
/// sits inside the generation region; averaging an infinite set only makes
/// sense if the fixture generator produced enough of it.
class WeightedDiracComb {
 public:
  WeightedDiracComb(int dim, std::vector<Point> points,
                    std::vector<complexd> weights,
                    std::optional<BoxWindow> generation_region = std::nullopt,
                    std::optional<double> discreteness_radius = std::nullopt,
                    double match_tol = kMatchTol);

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t i) const { return points_[i]; }
  const complexd& weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<complexd>& weights() const { return weights_; }

  const BoxWindow& region() const { return region_; }
  std::optional<double> discreteness_radius() const { return radius_; }

  bool unit_weights(double tol = 1e-12) const;
  /// Smallest gap between consecutive atoms (max-norm, d=1 exact; d=2 lower
  /// bounds by x-distance scan). Used to fill discreteness_radius.
  double min_gap() const;

  /// Throws RegionUnderflow unless `box` is inside the generation region.
  void ensure_covers(const BoxWindow& box, const char* who) const;

  /// Index range [first, last) of atoms whose x-coordinate lies in [lo, hi).
  std::pair<std::size_t, std::size_t> x_range(double lo, double hi) const;

  /// Visits atoms inside `box` (half-open) in sorted order.
  void for_each_in(const BoxWindow& box,
                   const std::function<void(std::size_t)>& fn) const;

  std::vector<std::size_t> indices_in(const BoxWindow& box) const;

  /// Total weight of atoms in `box` (half-open), pairwise-summed.
  complexd mass_in(const BoxWindow& box) const;
  std::size_t count_in(const BoxWindow& box) const;

  /// Index of the atom matching p within tol, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find(const Point& p, double tol = kMatchTol) const;

  WeightedDiracComb with_region(BoxWindow region) const;
  WeightedDiracComb with_weights(std::vector<complexd> weights) const;

 private:
  int dim_;
  std::vector<Point> points_;
  std::vector<complexd> weights_;
  BoxWindow region_;
  std::optional<double> radius_;
};

/// tau_t mu: every atom shifted by t, weights unchanged.
WeightedDiracComb translate(const WeightedDiracComb& mu, const Point& t);

/// mu restricted to the half-open box A.
WeightedDiracComb restrict(const WeightedDiracComb& mu, const BoxWindow& A);

/// (mu * phi)(t) = sum_x w_x phi(t - x). Throws RegionUnderflow if the atoms
/// needed for this evaluation were not generated.
complexd smooth(const WeightedDiracComb& mu, const TentFunction& phi,
                const Point& t);

/// Reusable callable for t -> (mu * phi)(t).
class SmoothedComb {
 public:
  SmoothedComb(WeightedDiracComb mu, TentFunction phi);

  complexd operator()(const Point& t) const;
  complexd operator()(double t) const { return (*this)(Point{t}); }

  const WeightedDiracComb& comb() const { return mu_; }
  const TentFunction& tent() const { return phi_; }
  /// Region of t on which evaluation is guaranteed not to underflow.
  BoxWindow valid_region() const;

 private:
  WeightedDiracComb mu_;
  TentFunction phi_;
};

}  // namespace diffract
