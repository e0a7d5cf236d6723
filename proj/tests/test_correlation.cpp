#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diffract/correlation.hpp"
#include "diffract/fixtures.hpp"

using namespace diffract;

namespace {
const double kA = std::sqrt(2.0) - 1.0;

// midpoint quadrature oracle for (phi * reflected phi)(z)
double tent_autoconv_quad(double w, double z) {
  const int m = 20000;
  const double lo = -w, hi = w;
  const double h = (hi - lo) / m;
  const TentFunction tent = TentFunction::width(w);
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double t = lo + (j + 0.5) * h;
    acc += tent(Point{t}) * tent(Point{t - z});
  }
  return acc * h;
}
}  // namespace

TEST_CASE("autocorrelation of the integer lattice matches the counting oracle") {
  const long n = 1000;
  auto mu = lattice_comb(-1100, 1100);
  auto g = autocorrelation(mu, VanHoveFamily::symmetric(), n,
                           AutocorrOptions{1e-6, 5.0});
  // window [-n, n) holds the 2n atoms -n .. n-1; the pair count at integer z
  // is 2n - |z|.
  for (long z = -5; z <= 5; ++z) {
    const double expect = (2.0 * n - std::abs(z)) / (2.0 * n);
    CHECK(g.eta(static_cast<double>(z)).real() ==
          doctest::Approx(expect).epsilon(1e-12));
  }
  // no off-integer atoms at all for a lattice
  for (std::size_t i = 0; i < g.diffs.size(); ++i) {
    const double z = g.diffs.point(i)[0];
    CHECK(std::abs(z - std::round(z)) < 1e-9);
  }
  CHECK(g.hermitian_defect() < 1e-12);
  CHECK(g.eta(0.0).imag() == doctest::Approx(0.0));
  CHECK(g.eta(0.0).real() > 0.0);
}

TEST_CASE("autocorrelation of a single atom decays like 1/|A_n|") {
  WeightedDiracComb delta0(1, {Point{0.0}}, {complexd{1.0, 0.0}},
                           BoxWindow::interval(-2000, 2000), 1.0);
  auto g = autocorrelation(delta0, VanHoveFamily::symmetric(), 1000,
                           AutocorrOptions{1e-6, 5.0});
  REQUIRE(g.diffs.size() == 1);
  CHECK(g.eta(0.0).real() == doctest::Approx(1.0 / 2000.0));
}

TEST_CASE("autocorrelation requires a discreteness radius") {
  WeightedDiracComb mu(1, {Point{0.0}, Point{1.0}}, {complexd{1}, complexd{1}},
                       BoxWindow::interval(-10, 10));
  CHECK_THROWS_AS(
      autocorrelation(mu, VanHoveFamily::symmetric(), 5, AutocorrOptions{}),
      NotUniformlyDiscrete);
}

TEST_CASE("a-defect autocorrelation is the integer lattice comb") {
  auto mu = a_defect_comb(kA, -2100.0, 2100.0);
  auto g = autocorrelation(mu, VanHoveFamily::symmetric(), 2000,
                           AutocorrOptions{1e-6, 5.0});
  for (long z = -5; z <= 5; ++z)
    CHECK(g.eta(static_cast<double>(z)).real() ==
          doctest::Approx(1.0).epsilon(5e-3));
  double worst_off = 0.0;
  for (std::size_t i = 0; i < g.diffs.size(); ++i) {
    const double z = g.diffs.point(i)[0];
    if (std::abs(z - std::round(z)) > 1e-6)
      worst_off = std::max(worst_off, std::abs(g.diffs.weight(i)));
  }
  CHECK(worst_off < 5e-3);
  // |d^K A_n| / |A_n| with K = [-5, 5], A_n = [-2000, 2000]: 4*5 / 4000
  CHECK(g.boundary_loss_bound == doctest::Approx(20.0 / 4000.0));
}

TEST_CASE("weighted autocorrelation: eta(0) collects |w|^2") {
  WeightedDiracComb mu(1, {Point{0.0}, Point{1.0}, Point{2.5}},
                       {complexd{1.0, 1.0}, complexd{0.0, 2.0}, complexd{-1.0, 0.0}},
                       BoxWindow::interval(-10, 10), 1.0);
  auto g = autocorrelation(mu, VanHoveFamily::symmetric(), 5,
                           AutocorrOptions{1e-6, 5.0});
  // window [-5, 5): all three atoms; eta(0) = (2 + 4 + 1) / 10
  CHECK(g.eta(0.0).real() == doctest::Approx(0.7));
  CHECK(g.eta(0.0).imag() == doctest::Approx(0.0));
  // eta(1) = w(1) conj(w(0)) / 10 = (0+2i)(1-1i)/10 = (2 + 2i)/10
  CHECK(g.eta(1.0).real() == doctest::Approx(0.2));
  CHECK(g.eta(1.0).imag() == doctest::Approx(0.2));
  CHECK(g.hermitian_defect() < 1e-15);
}

TEST_CASE("pair correlation: lattice, a-defect hits and misses") {
  auto z = lattice_comb(-1100, 1100);
  auto rep = pair_correlation(z, Point{3.0}, VanHoveFamily::symmetric(),
                              NRange::geometric_with_tail(100, 1000, 4, 8));
  CHECK(rep.converged());
  CHECK(rep.limit.real() == doctest::Approx(1.0).epsilon(5e-3));

  auto mu = a_defect_comb(kA, -1100.0, 1100.0);
  auto r0 = pair_correlation(mu, Point{0.5}, VanHoveFamily::symmetric(),
                             NRange::geometric_with_tail(100, 1000, 4, 8));
  CHECK(r0.converged());
  CHECK(std::abs(r0.limit) < 1e-6);  // finite intersection

  auto r2 = pair_correlation(mu, Point{2.0}, VanHoveFamily::symmetric(),
                             NRange::geometric_with_tail(100, 1000, 4, 8));
  CHECK(r2.converged());
  CHECK(r2.limit.real() == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("pair correlation of {n, -2n} oscillates along alternating windows") {
  auto mu = n_minus_2n_comb(-3300.0, 3300.0);
  auto rep = pair_correlation(mu, Point{1.0}, VanHoveFamily::alternating(),
                              NRange::geometric_with_tail(100, 1000, 4, 10));
  REQUIRE(rep.oscillating());
  REQUIRE(rep.clusters.size() == 2);
  CHECK(rep.clusters[0].real() == doctest::Approx(0.5).epsilon(5e-3));
  CHECK(rep.clusters[1].real() == doctest::Approx(0.75).epsilon(5e-3));
}

TEST_CASE("tent self-convolution closed form matches quadrature") {
  for (double w : {0.5, 1.0, 1.7}) {
    for (double z : {0.0, 0.2, 0.5, 0.9, 1.3, 1.9, 2.1}) {
      CHECK(tent_self_convolution(w, z * w) ==
            doctest::Approx(tent_autoconv_quad(w, z * w)).epsilon(1e-6));
    }
    CHECK(tent_self_convolution(w, 0.0) == doctest::Approx(2.0 * w / 3.0));
    CHECK(tent_self_convolution(w, 2.0 * w) == doctest::Approx(0.0));
  }
}

TEST_CASE("eberlein convolution of functions") {
  const FnD one = [](const Point&) { return complexd{1.0, 0.0}; };
  const double k = 0.7;
  const FnD chi = [k](const Point& t) {
    return std::polar(1.0, 2.0 * std::numbers::pi * k * t[0]);
  };
  const std::vector<Point> ts = {Point{0.0}, Point{0.3}, Point{1.7}};
  const NRange ns = NRange::geometric_with_tail(20, 200, 3, 6);

  auto r1 = eberlein_fn(one, one, 1, VanHoveFamily::symmetric(), ns, ts);
  for (const auto& v : r1.limits) CHECK(v.real() == doctest::Approx(1.0));

  // (chi (*) chi)(t) = chi(t): the integrand chi(s) chi(t-s) is constant.
  auto r2 = eberlein_fn(chi, chi, 1, VanHoveFamily::symmetric(), ns, ts);
  for (std::size_t i = 0; i < ts.size(); ++i)
    CHECK(std::abs(r2.limits[i] - chi(ts[i])) < 1e-9);
}

TEST_CASE("eberlein autoconvolution at 0 equals the smoothing-identity route") {
  // f = delta_Z * tent(0.5); f (*) reflected-conjugate f at t = 0 must equal
  // M(|f|^2), which the smoothing identity writes as sum_z eta(z) (phi*phi~)(z).
  auto mu = lattice_comb(-900, 900);
  const TentFunction tent = TentFunction::width(0.5);
  SmoothedComb f(mu, tent);
  const FnD fn = [&](const Point& t) { return f(t); };
  const FnD fn_refl_conj = [&](const Point& t) {
    return std::conj(f(negate(t)));
  };
  const NRange ns = NRange::geometric_with_tail(50, 500, 3, 6);
  auto r = eberlein_fn(fn, fn_refl_conj, 1, VanHoveFamily::symmetric(), ns,
                       {Point{0.0}});
  // route 2: autocorrelation + closed-form tent self-convolution
  auto g = autocorrelation(mu, VanHoveFamily::symmetric(), 500,
                           AutocorrOptions{1e-6, 3.0});
  complexd via_eta{};
  for (std::size_t i = 0; i < g.diffs.size(); ++i)
    via_eta += g.diffs.weight(i) *
               tent_self_convolution(tent, g.diffs.point(i));
  CHECK(std::abs(r.limits[0] - via_eta) < 2e-3);
  CHECK(r.limits[0].real() == doctest::Approx(1.0 / 3.0).epsilon(5e-3));
}

TEST_CASE("autocorrelation is family-independent for the a-defect") {
  auto mu = a_defect_comb(kA, -2100.0, 2.0 * 2000.0 + 100.0);
  auto g_sym = autocorrelation(mu, VanHoveFamily::symmetric(), 2000,
                               AutocorrOptions{1e-6, 5.0});
  auto g_skew = autocorrelation(mu, VanHoveFamily::skew(2.0), 2000,
                                AutocorrOptions{1e-6, 5.0});
  for (long z = -5; z <= 5; ++z) {
    CHECK(std::abs(g_sym.eta(static_cast<double>(z)) -
                   g_skew.eta(static_cast<double>(z))) < 5e-3);
  }
}

TEST_CASE("2-d autocorrelation: lattice differences stay on the grid") {
  std::vector<Point> pts;
  for (int i = -8; i <= 8; ++i)
    for (int j = -8; j <= 8; ++j) pts.emplace_back(double(i), double(j));
  std::vector<complexd> ws(pts.size(), complexd{1.0, 0.0});
  WeightedDiracComb z2(2, pts, ws, BoxWindow::box2(-8, 8, -8, 8), 1.0);
  auto g = autocorrelation(z2, VanHoveFamily::symmetric(2), 5,
                           AutocorrOptions{1e-6, 2.0});
  // differences live on Z^2 and eta(0,0) = count/|A| = 100/100
  CHECK(g.eta(Point{0.0, 0.0}).real() == doctest::Approx(1.0));
  CHECK(g.eta(Point{1.0, 1.0}).real() == doctest::Approx(81.0 / 100.0));
  for (std::size_t i = 0; i < g.diffs.size(); ++i) {
    CHECK(std::abs(g.diffs.point(i)[0] - std::round(g.diffs.point(i)[0])) < 1e-9);
    CHECK(std::abs(g.diffs.point(i)[1] - std::round(g.diffs.point(i)[1])) < 1e-9);
  }
}
