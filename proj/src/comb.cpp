#include "diffract/comb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "diffract/summation.hpp"

namespace diffract {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

complexd Character::operator()(const Point& t) const {
  double phase = 0.0;
  for (int i = 0; i < dim; ++i) phase += freq[i] * t[i];
  return std::polar(1.0, kTwoPi * phase);
}

TentFunction::TentFunction(int d, double w, Point c)
    : dim(d), halfwidth(w), center(c) {
  if (d < 1 || d > 2) throw std::invalid_argument("TentFunction: dim must be 1 or 2");
  if (!(w > 0.0)) throw std::invalid_argument("TentFunction: halfwidth must be > 0");
}

double TentFunction::operator()(const Point& t) const {
  double v = 1.0;
  for (int i = 0; i < dim; ++i) {
    v *= std::max(0.0, 1.0 - std::abs(t[i] - center[i]) / halfwidth);
    if (v == 0.0) return 0.0;
  }
  return v;
}

BoxWindow TentFunction::support() const {
  Point lo = center, hi = center;
  for (int i = 0; i < dim; ++i) {
    lo[i] -= halfwidth;
    hi[i] += halfwidth;
  }
  return BoxWindow(dim, lo, hi);
}

double TentFunction::integral() const { return std::pow(halfwidth, dim); }

complexd tent_fourier(const TentFunction& phi, const Point& k) {
  complexd out{1.0, 0.0};
  for (int i = 0; i < phi.dim; ++i) {
    const double w = phi.halfwidth;
    double shape = w;
    const double arg = std::numbers::pi * k[i] * w;
    if (arg != 0.0) {
      const double s = std::sin(arg) / arg;
      shape = w * s * s;
    }
    out *= std::polar(shape, -kTwoPi * k[i] * phi.center[i]);
  }
  return out;
}

complexd tent_fourier(const TentFunction& phi, double k) {
  return tent_fourier(phi, Point{k});
}

WeightedDiracComb::WeightedDiracComb(int dim, std::vector<Point> points,
                                     std::vector<complexd> weights,
                                     std::optional<BoxWindow> generation_region,
                                     std::optional<double> discreteness_radius,
                                     double match_tol)
    : dim_(dim), points_(std::move(points)), weights_(std::move(weights)),
      radius_(discreteness_radius) {
  if (dim_ < 1 || dim_ > 2)
    throw std::invalid_argument("WeightedDiracComb: dim must be 1 or 2");
  if (points_.size() != weights_.size())
    throw std::invalid_argument("WeightedDiracComb: points/weights size mismatch");
  for (const auto& p : points_) {
    if (!all_finite(p, dim_))
      throw std::invalid_argument("WeightedDiracComb: non-finite point");
  }
  for (const auto& w : weights_) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw std::invalid_argument("WeightedDiracComb: non-finite weight");
  }

  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(points_[a], points_[b], dim_);
  });
  std::vector<Point> sorted_pts(points_.size());
  std::vector<complexd> sorted_ws(points_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted_pts[i] = points_[order[i]];
    sorted_ws[i] = weights_[order[i]];
  }
  points_ = std::move(sorted_pts);
  weights_ = std::move(sorted_ws);

  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (points_match(points_[i], points_[i + 1], dim_, match_tol))
      throw std::invalid_argument(
          "WeightedDiracComb: duplicate atoms within match_tol");
  }

  if (generation_region) {
    region_ = *generation_region;
  } else if (!points_.empty()) {
    Point lo = points_.front(), hi = points_.front();
    for (const auto& p : points_) {
      for (int i = 0; i < dim_; ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
    }
    for (int i = 0; i < dim_; ++i) hi[i] = std::nextafter(hi[i] + match_tol, INFINITY);
    region_ = BoxWindow(dim_, lo, hi);
  } else {
    region_ = dim_ == 1 ? BoxWindow::interval(0.0, 1e-300)
                        : BoxWindow::box2(0.0, 1e-300, 0.0, 1e-300);
  }

  if (radius_) {
    if (!(*radius_ > 0.0))
      throw std::invalid_argument(
          "WeightedDiracComb: discreteness radius must be > 0");
    if (min_gap() < *radius_ - match_tol)
      throw std::invalid_argument(
          "WeightedDiracComb: atoms violate the declared discreteness radius");
  }
}

bool WeightedDiracComb::unit_weights(double tol) const {
  for (const auto& w : weights_) {
    if (std::abs(w - complexd{1.0, 0.0}) > tol) return false;
  }
  return true;
}

double WeightedDiracComb::min_gap() const {
  if (points_.size() < 2) return INFINITY;
  double gap = INFINITY;
  if (dim_ == 1) {
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
      gap = std::min(gap, points_[i + 1][0] - points_[i][0]);
    return gap;
  }
  // d = 2: sorted by x; for each atom scan forward while x-distance could
  // still beat the current best.
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      const double dx = points_[j][0] - points_[i][0];
      if (dx >= gap) break;
      gap = std::min(gap, max_norm_dist(points_[i], points_[j], 2));
    }
  }
  return gap;
}

void WeightedDiracComb::ensure_covers(const BoxWindow& box, const char* who) const {
  if (!region_.covers(box)) {
    std::ostringstream os;
    os << who << ": needs atoms over " << box.describe()
       << " but the comb was generated over " << region_.describe();
    throw RegionUnderflow(os.str());
  }
}

std::pair<std::size_t, std::size_t> WeightedDiracComb::x_range(double lo,
                                                               double hi) const {
  auto first = std::lower_bound(points_.begin(), points_.end(), lo,
                                [](const Point& p, double v) { return p[0] < v; });
  auto last = std::lower_bound(first, points_.end(), hi,
                               [](const Point& p, double v) { return p[0] < v; });
  return {static_cast<std::size_t>(first - points_.begin()),
          static_cast<std::size_t>(last - points_.begin())};
}

void WeightedDiracComb::for_each_in(
    const BoxWindow& box, const std::function<void(std::size_t)>& fn) const {
  auto [first, last] = x_range(box.lower[0], box.upper[0]);
  for (std::size_t i = first; i < last; ++i) {
    if (dim_ == 1 || (points_[i][1] >= box.lower[1] && points_[i][1] < box.upper[1]))
      fn(i);
  }
}

std::vector<std::size_t> WeightedDiracComb::indices_in(const BoxWindow& box) const {
  std::vector<std::size_t> out;
  for_each_in(box, [&](std::size_t i) { out.push_back(i); });
  return out;
}

complexd WeightedDiracComb::mass_in(const BoxWindow& box) const {
  const auto idx = indices_in(box);
  return pairwise_sum(idx.size(), [&](std::size_t i) { return weights_[idx[i]]; });
}

std::size_t WeightedDiracComb::count_in(const BoxWindow& box) const {
  return indices_in(box).size();
}

std::size_t WeightedDiracComb::find(const Point& p, double tol) const {
  auto [first, last] = x_range(p[0] - tol, std::nextafter(p[0] + tol, INFINITY));
  for (std::size_t i = first; i < last; ++i) {
    if (points_match(points_[i], p, dim_, tol)) return i;
  }
  return npos;
}

WeightedDiracComb WeightedDiracComb::with_region(BoxWindow region) const {
  return WeightedDiracComb(dim_, points_, weights_, region, radius_);
}

WeightedDiracComb WeightedDiracComb::with_weights(std::vector<complexd> ws) const {
  return WeightedDiracComb(dim_, points_, std::move(ws), region_, radius_);
}

WeightedDiracComb translate(const WeightedDiracComb& mu, const Point& t) {
  std::vector<Point> pts = mu.points();
  for (auto& p : pts) p = add(p, t);
  return WeightedDiracComb(mu.dim(), std::move(pts), mu.weights(),
                           mu.region().shifted(t), mu.discreteness_radius());
}

WeightedDiracComb restrict(const WeightedDiracComb& mu, const BoxWindow& A) {
  std::vector<Point> pts;
  std::vector<complexd> ws;
  mu.for_each_in(A, [&](std::size_t i) {
    pts.push_back(mu.point(i));
    ws.push_back(mu.weight(i));
  });
  return WeightedDiracComb(mu.dim(), std::move(pts), std::move(ws), A,
                           mu.discreteness_radius());
}

complexd smooth(const WeightedDiracComb& mu, const TentFunction& phi,
                const Point& t) {
  if (phi.dim != mu.dim())
    throw std::invalid_argument("smooth: dimension mismatch");
  // phi(t - x) != 0 only for x in (t - center) + (-w, w)^d.
  Point lo, hi;
  for (int i = 0; i < mu.dim(); ++i) {
    lo[i] = t[i] - phi.center[i] - phi.halfwidth;
    hi[i] = t[i] - phi.center[i] + phi.halfwidth;
  }
  const BoxWindow needed(mu.dim(), lo, hi);
  mu.ensure_covers(needed, "smooth");
  const auto idx = mu.indices_in(needed);
  return pairwise_sum(idx.size(), [&](std::size_t i) {
    return mu.weight(idx[i]) * phi(sub(t, mu.point(idx[i])));
  });
}

SmoothedComb::SmoothedComb(WeightedDiracComb mu, TentFunction phi)
    : mu_(std::move(mu)), phi_(std::move(phi)) {}

complexd SmoothedComb::operator()(const Point& t) const {
  return smooth(mu_, phi_, t);
}

BoxWindow SmoothedComb::valid_region() const {
  Point lo = mu_.region().lower, hi = mu_.region().upper;
  for (int i = 0; i < mu_.dim(); ++i) {
    lo[i] += phi_.center[i] + phi_.halfwidth;
    hi[i] += phi_.center[i] - phi_.halfwidth;
  }
  return BoxWindow(mu_.dim(), lo, hi);
}

}  // namespace diffract
