#include "diffract/fixtures.hpp"

#include <cmath>
#include <stdexcept>

namespace diffract {

WeightedDiracComb lattice_comb(double lo, double hi, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("lattice_comb: spacing > 0");
  std::vector<Point> pts;
  for (long m = static_cast<long>(std::ceil(lo / spacing));
       m * spacing <= hi; ++m)
    pts.push_back(Point{m * spacing});
  std::vector<complexd> ws(pts.size(), complexd{1.0, 0.0});
  return WeightedDiracComb(1, std::move(pts), std::move(ws),
                           BoxWindow::interval(lo, hi), spacing);
}

WeightedDiracComb a_defect_comb(double a, double lo, double hi) {
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument("a_defect_comb: a must lie in (0, 1)");
  std::vector<Point> pts;
  for (long n = 1; -static_cast<double>(n) >= lo; ++n) {
    const double x = -static_cast<double>(n);
    if (x <= hi) pts.push_back(Point{x});
  }
  for (long n = 1; static_cast<double>(n) - a <= hi; ++n) {
    const double x = static_cast<double>(n) - a;
    if (x >= lo) pts.push_back(Point{x});
  }
  std::vector<complexd> ws(pts.size(), complexd{1.0, 0.0});
  return WeightedDiracComb(1, std::move(pts), std::move(ws),
                           BoxWindow::interval(lo, hi), std::min(a, 1.0 - a));
}

WeightedDiracComb n_minus_2n_comb(double lo, double hi) {
  std::vector<Point> pts;
  for (long n = 1; static_cast<double>(n) <= hi; ++n) {
    if (static_cast<double>(n) >= lo) pts.push_back(Point{static_cast<double>(n)});
  }
  for (long n = 1; -2.0 * static_cast<double>(n) >= lo; ++n) {
    const double x = -2.0 * static_cast<double>(n);
    if (x <= hi) pts.push_back(Point{x});
  }
  std::vector<complexd> ws(pts.size(), complexd{1.0, 0.0});
  return WeightedDiracComb(1, std::move(pts), std::move(ws),
                           BoxWindow::interval(lo, hi), 1.0);
}

WeightedDiracComb exponential_blocks_comb(double lo, double hi) {
  std::vector<Point> pts;
  for (long n = 1; std::pow(2.0, n) <= hi; ++n) {
    const double base = std::pow(2.0, n);
    for (long k = 1; k <= n; ++k) {
      const double x = base + static_cast<double>(k);
      if (x >= lo && x <= hi) pts.push_back(Point{x});
    }
  }
  std::vector<complexd> ws(pts.size(), complexd{1.0, 0.0});
  return WeightedDiracComb(1, std::move(pts), std::move(ws),
                           BoxWindow::interval(lo, hi), 1.0);
}

WeightedDiracComb fibonacci_comb(double lo, double hi) {
  auto comb = generate_model_set(CutProjectScheme::fibonacci(), lo, hi, 2.0);
  // Narrow the declared region to the requested one.
  return WeightedDiracComb(1, comb.points(), comb.weights(),
                           BoxWindow::interval(lo, hi),
                           comb.discreteness_radius());
}

Fn1 step_ramp_function() {
  return [](double x) -> complexd {
    if (x <= 0.0) return {0.0, 0.0};
    if (x >= 1.0) return {1.0, 0.0};
    return {x, 0.0};
  };
}

WeightedDiracComb make_fixture(const std::string& name,
                               const std::vector<double>& params, double lo,
                               double hi) {
  if (name == "lattice")
    return lattice_comb(lo, hi, params.empty() ? 1.0 : params[0]);
  if (name == "a_defect" || name == "a-defect")
    return a_defect_comb(params.empty() ? std::sqrt(2.0) - 1.0 : params[0], lo, hi);
  if (name == "n_minus_2n") return n_minus_2n_comb(lo, hi);
  if (name == "blocks") return exponential_blocks_comb(lo, hi);
  if (name == "fibonacci") return fibonacci_comb(lo, hi);
  throw UnknownFixture("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"lattice", "a_defect", "n_minus_2n", "blocks", "fibonacci"};
}

}  // namespace diffract
