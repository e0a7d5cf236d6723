#include "diffract/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace diffract {

bool all_finite(const Point& p, int dim) {
  for (int i = 0; i < dim; ++i) {
    if (!std::isfinite(p[i])) return false;
  }
  return true;
}

BoxWindow::BoxWindow(int d, Point lo, Point hi) : dim(d), lower(lo), upper(hi) {
  if (d < 1 || d > 2) throw std::invalid_argument("BoxWindow: dim must be 1 or 2");
  for (int i = 0; i < d; ++i) {
    if (!(lo[i] < hi[i]))
      throw std::invalid_argument("BoxWindow: lower must be < upper per axis");
  }
}

BoxWindow BoxWindow::interval(double lo, double hi) {
  return BoxWindow(1, Point{lo}, Point{hi});
}

BoxWindow BoxWindow::box2(double lo0, double hi0, double lo1, double hi1) {
  return BoxWindow(2, Point{lo0, lo1}, Point{hi0, hi1});
}

double BoxWindow::volume() const {
  double v = 1.0;
  for (int i = 0; i < dim; ++i) v *= side(i);
  return v;
}

bool BoxWindow::contains_half_open(const Point& p) const {
  for (int i = 0; i < dim; ++i) {
    if (p[i] < lower[i] || p[i] >= upper[i]) return false;
  }
  return true;
}

bool BoxWindow::contains_closed(const Point& p, double tol) const {
  for (int i = 0; i < dim; ++i) {
    if (p[i] < lower[i] - tol || p[i] > upper[i] + tol) return false;
  }
  return true;
}

bool BoxWindow::covers(const BoxWindow& inner, double tol) const {
  if (inner.dim != dim) return false;
  for (int i = 0; i < dim; ++i) {
    if (inner.lower[i] < lower[i] - tol || inner.upper[i] > upper[i] + tol)
      return false;
  }
  return true;
}

BoxWindow BoxWindow::shifted(const Point& t) const {
  return BoxWindow(dim, add(lower, t), add(upper, t));
}

BoxWindow BoxWindow::padded(double pad) const {
  Point lo = lower, hi = upper;
  for (int i = 0; i < dim; ++i) {
    lo[i] -= pad;
    hi[i] += pad;
  }
  return BoxWindow(dim, lo, hi);
}

double BoxWindow::k_boundary_volume(const BoxWindow& K) const {
  if (K.dim != dim) throw std::invalid_argument("k_boundary_volume: dim mismatch");
  // Part 1: closure(A+K) \ A. A+K is the box [lower+K.lower, upper+K.upper].
  double grown = 1.0, grown_cap_a = 1.0;
  for (int i = 0; i < dim; ++i) {
    const double glo = lower[i] + K.lower[i];
    const double ghi = upper[i] + K.upper[i];
    grown *= ghi - glo;
    grown_cap_a *= std::max(0.0, std::min(upper[i], ghi) - std::max(lower[i], glo));
  }
  const double part1 = grown - grown_cap_a;
  // Part 2: ((complement A) - K) intersect closure(A); its complement inside A
  // is the erosion {x : x + K inside A} = [lower-K.lower, upper-K.upper].
  double vol_a = 1.0, eroded_cap_a = 1.0;
  for (int i = 0; i < dim; ++i) {
    vol_a *= side(i);
    const double elo = lower[i] - K.lower[i];
    const double ehi = upper[i] - K.upper[i];
    eroded_cap_a *= std::max(0.0, std::min(upper[i], ehi) - std::max(lower[i], elo));
  }
  const double part2 = vol_a - eroded_cap_a;
  // The two parts meet only on the topological boundary of A (measure zero).
  return std::max(0.0, part1) + std::max(0.0, part2);
}

double BoxWindow::symmetric_difference_volume(const Point& t) const {
  double overlap = 1.0;
  for (int i = 0; i < dim; ++i) {
    overlap *= std::max(0.0, side(i) - std::abs(t[i]));
  }
  return 2.0 * (volume() - overlap);
}

std::string BoxWindow::describe() const {
  std::ostringstream os;
  os << "[" << lower[0] << ", " << upper[0] << ")";
  if (dim == 2) os << " x [" << lower[1] << ", " << upper[1] << ")";
  return os.str();
}

}  // namespace diffract
