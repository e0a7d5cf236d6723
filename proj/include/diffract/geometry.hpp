#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diffract {

/// Default coincidence tolerance: two points are "the same" if they agree
/// within this distance in the max-norm.
inline constexpr double kMatchTol = 1e-9;

/// A point of G = R^d with d in {1,2}. The active dimension is carried by
/// the containing object (comb, window); unused coordinates stay zero.
struct Point {
  std::array<double, 2> c{0.0, 0.0};

  Point() = default;
  explicit Point(double x) : c{x, 0.0} {}
  Point(double x, double y) : c{x, y} {}

  double operator[](std::size_t i) const { return c[i]; }
  double& operator[](std::size_t i) { return c[i]; }

  double x() const { return c[0]; }
};

inline Point add(const Point& a, const Point& b) {
  return Point{a.c[0] + b.c[0], a.c[1] + b.c[1]};
}

inline Point sub(const Point& a, const Point& b) {
  return Point{a.c[0] - b.c[0], a.c[1] - b.c[1]};
}

inline Point negate(const Point& a) { return Point{-a.c[0], -a.c[1]}; }

/// Max-norm distance restricted to the first `dim` coordinates.
inline double max_norm_dist(const Point& a, const Point& b, int dim) {
  double m = 0.0;
  for (int i = 0; i < dim; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline bool points_match(const Point& a, const Point& b, int dim,
                         double tol = kMatchTol) {
  return max_norm_dist(a, b, dim) <= tol;
}

/// Lexicographic order on the first `dim` coordinates.
inline bool lex_less(const Point& a, const Point& b, int dim) {
  for (int i = 0; i < dim; ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

bool all_finite(const Point& p, int dim);

/// An axis-aligned box [lower, upper]. Restriction and window membership use
/// the half-open convention [lower, upper) so that disjoint tilings split a
/// comb without double counting.
struct BoxWindow {
  int dim = 1;
  Point lower;
  Point upper;

  BoxWindow() = default;
  BoxWindow(int d, Point lo, Point hi);

  static BoxWindow interval(double lo, double hi);
  static BoxWindow box2(double lo0, double hi0, double lo1, double hi1);

  double side(int i) const { return upper[i] - lower[i]; }
  double volume() const;

  bool contains_half_open(const Point& p) const;
  bool contains_closed(const Point& p, double tol = 0.0) const;
  /// True if `inner` fits inside this box (closed containment with slack).
  bool covers(const BoxWindow& inner, double tol = kMatchTol) const;

  BoxWindow shifted(const Point& t) const;
  BoxWindow padded(double pad) const;

  /// Volume of the K-boundary of this box,
  ///   closure(A+K)\A  union  ((complement A) - K) intersect closure(A),
  /// in closed form for a box K.
  double k_boundary_volume(const BoxWindow& K) const;

  /// |A symmetric-difference (t+A)| in closed form.
  double symmetric_difference_volume(const Point& t) const;

  std::string describe() const;
};

// ---- error types -----------------------------------------------------------

/// An operation tried to read atoms outside the comb's declared generation
/// region. Raised instead of silently truncating an average.
struct RegionUnderflow : std::runtime_error {
  explicit RegionUnderflow(const std::string& what) : std::runtime_error(what) {}
};

/// Pair sweeps refuse combs that do not declare a discreteness radius.
struct NotUniformlyDiscrete : std::runtime_error {
  explicit NotUniformlyDiscrete(const std::string& what)
      : std::runtime_error(what) {}
};

/// The autocorrelation support was generated only up to z_max, but a larger
/// window was requested.
struct SupportUnderflow : std::runtime_error {
  explicit SupportUnderflow(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateBasis : std::runtime_error {
  explicit DegenerateBasis(const std::string& what) : std::runtime_error(what) {}
};

struct NotALatticePoint : std::runtime_error {
  explicit NotALatticePoint(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownFixture : std::runtime_error {
  explicit UnknownFixture(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace diffract
