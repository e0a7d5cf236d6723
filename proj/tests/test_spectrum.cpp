#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diffract/fixtures.hpp"
#include "diffract/model_sets.hpp"
#include "diffract/spectrum.hpp"

using namespace diffract;

namespace {
const double kA = std::sqrt(2.0) - 1.0;
const double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TEST_CASE("fourier_bohr: lattice at integer and non-integer frequencies") {
  auto mu = lattice_comb(-1100, 1100);
  const NRange ns = NRange::geometric_with_tail(100, 1000, 4, 8);
  auto r1 = fourier_bohr(mu, Point{1.0}, VanHoveFamily::symmetric(), ns);
  CHECK(r1.converged());
  CHECK(std::abs(r1.limit - complexd{1.0, 0.0}) < 1e-9);

  // geometric-sum oracle: the numerator of the windowed sum at k = 0.3 is
  // bounded by 1/|sin(pi 0.3)|, so the estimate decays like 1/n.
  auto r2 = fourier_bohr(mu, Point{0.3}, VanHoveFamily::symmetric(), ns);
  CHECK(r2.converged());
  CHECK(std::abs(r2.limit) < 1e-2);
  const double bound = 1.0 / std::sin(std::numbers::pi * 0.3);
  for (std::size_t i = 0; i < ns.values.size(); ++i)
    CHECK(std::abs(r2.estimates[i]) <=
          bound / (2.0 * static_cast<double>(ns.values[i])) + 1e-12);
}

TEST_CASE("fourier_bohr: a-defect along skew windows (closed form)") {
  auto mu = a_defect_comb(kA, -2200.0, 2.0 * 2000.0 + 200.0);
  for (double b : {1.0, 2.0}) {
    for (double lam : {1.0, 2.0}) {
      auto rep = fourier_bohr(mu, Point{lam}, VanHoveFamily::skew(b),
                              NRange::geometric_with_tail(100, 2000, 4, 8));
      const complexd expect =
          (1.0 + b * std::polar(1.0, kTwoPi * lam * kA)) / (b + 1.0);
      CHECK(rep.converged());
      CHECK(std::abs(rep.value() - expect) < 5e-3);
    }
    // non-integer frequency: coefficient vanishes
    auto rep0 = fourier_bohr(mu, Point{0.5}, VanHoveFamily::skew(b),
                             NRange::geometric_with_tail(100, 2000, 4, 8));
    CHECK(std::abs(rep0.value()) < 5e-3);
  }
}

TEST_CASE("fourier_bohr oscillates along the alternating family") {
  auto mu = a_defect_comb(kA, -2200.0, 3.0 * 2000.0 + 200.0);
  auto rep = fourier_bohr(mu, Point{1.0}, VanHoveFamily::alternating(),
                          NRange::geometric_with_tail(100, 2000, 4, 10));
  REQUIRE(rep.oscillating());
  REQUIRE(rep.clusters.size() == 2);
  const complexd even_cluster =
      (1.0 + 3.0 * std::polar(1.0, kTwoPi * kA)) / 4.0;
  const complexd odd_cluster = (1.0 + std::polar(1.0, kTwoPi * kA)) / 2.0;
  double best_even = 1e9, best_odd = 1e9;
  for (const auto& c : rep.clusters) {
    best_even = std::min(best_even, std::abs(c - even_cluster));
    best_odd = std::min(best_odd, std::abs(c - odd_cluster));
  }
  CHECK(best_even < 5e-3);
  CHECK(best_odd < 5e-3);
}

TEST_CASE("fourier_bohr_uniform: lattice is uniform, blocks are not") {
  auto z = lattice_comb(-1300, 1300);
  auto ur = fourier_bohr_uniform(z, Point{2.0}, VanHoveFamily::symmetric(),
                                 NRange::geometric_with_tail(100, 1000, 4, 8),
                                 ShiftGrid::explicit_shifts({0.0, 0.3, 7.1}),
                                 1e-2);
  CHECK(ur.uniform);
  CHECK(std::abs(ur.limit - complexd{1.0, 0.0}) < 1e-6);

  // a-defect: shifted symmetric windows rebalance to the same limit
  auto mu = a_defect_comb(kA, -10200.0, 10200.0);
  auto ua = fourier_bohr_uniform(mu, Point{1.0}, VanHoveFamily::symmetric(),
                                 NRange::geometric_with_tail(1000, 10000, 4, 8),
                                 ShiftGrid::explicit_shifts({0.0, 100.0}), 2e-2);
  CHECK(ua.uniform);
  CHECK(std::abs(ua.limit - (1.0 + std::polar(1.0, kTwoPi * kA)) / 2.0) < 2e-2);

  // exponential blocks: the density seen from inside a block differs from the
  // density at the origin at matching scales.
  const double big = std::pow(2.0, 14.0);
  auto blocks = exponential_blocks_comb(-40000.0, 40000.0);
  ConvergenceOptions coarse;
  coarse.tol = 6e-2;
  auto ub = fourier_bohr_uniform(blocks, Point{0.0}, VanHoveFamily::symmetric(),
                                 NRange::consecutive(5, 14),
                                 ShiftGrid::explicit_shifts({0.0, big}), 1e-1,
                                 coarse);
  CHECK_FALSE(ub.uniform);
  CHECK(ub.spread > 0.1);
}

TEST_CASE("diffraction_intensity: Poisson oracle for the lattice") {
  auto mu = lattice_comb(-10200, 10200);
  auto g = autocorrelation(mu, VanHoveFamily::symmetric(), 10000,
                           AutocorrOptions{1e-6, 100.0});
  const NRange ms = NRange::geometric_with_tail(10, 100, 4, 10);
  for (double k : {0.0, 1.0, 2.0}) {
    auto rep = diffraction_intensity(g, Point{k}, VanHoveFamily::symmetric(), ms);
    CHECK(intensity_value(rep, 1e-2) == doctest::Approx(1.0).epsilon(5e-3));
  }
  auto rep = diffraction_intensity(g, Point{0.5}, VanHoveFamily::symmetric(), ms);
  CHECK(std::abs(intensity_value(rep, 1e-2)) < 1e-2);

  CHECK_THROWS_AS(diffraction_intensity(g, Point{0.0}, VanHoveFamily::symmetric(),
                                        NRange::single(200)),
                  SupportUnderflow);
}

TEST_CASE("diffraction_intensity: Lebesgue-sampled autocorrelation of the step") {
  // gamma = (1/2) Lebesgue, sampled on a grid of step h with weights h/2.
  const double h = 0.01;
  std::vector<Point> pts;
  std::vector<complexd> ws;
  for (double z = -50.0; z < 50.0; z += h) {
    pts.push_back(Point{z});
    ws.push_back(complexd{h / 2.0, 0.0});
  }
  Autocorrelation g{WeightedDiracComb(1, pts, ws, BoxWindow::interval(-50, 50), h),
                    "sampled", 0, 1e-9, 50.0, 0.0};
  auto r0 = diffraction_intensity(g, Point{0.0}, VanHoveFamily::symmetric(),
                                  NRange::geometric_with_tail(10, 50, 4, 8));
  CHECK(intensity_value(r0, 1e-2) == doctest::Approx(0.5).epsilon(1e-3));
  auto r1 = diffraction_intensity(g, Point{1.0}, VanHoveFamily::symmetric(),
                                  NRange::geometric_with_tail(10, 50, 4, 8));
  CHECK(std::abs(intensity_value(r1, 1e-2)) < 1e-2);
}

TEST_CASE("intensity clamps small negatives to zero") {
  ConvergenceReport rep;
  rep.n_values = {1, 2, 3, 4, 5};
  rep.estimates.assign(5, complexd{-5e-4, 0.0});
  rep.status = ConvergenceStatus::converged;
  rep.limit = complexd{-5e-4, 0.0};
  bool clamped = false;
  CHECK(intensity_value(rep, 1e-2, &clamped) == 0.0);
  CHECK(clamped);
}

TEST_CASE("cpp_check: the lattice passes, the a-defect fails by sin^2(pi a)") {
  auto z = lattice_comb(-2200, 2200);
  auto table = cpp_check(z, VanHoveFamily::symmetric(),
                         {Point{0.0}, Point{1.0}, Point{2.0}}, 2000, 1e-2);
  CHECK(table.pass);
  for (const auto& row : table.rows) CHECK(row.cpp_residual < 1e-2);

  auto mu = a_defect_comb(kA, -2200.0, 2200.0);
  auto t2 = cpp_check(mu, VanHoveFamily::symmetric(), {Point{1.0}}, 2000, 1e-2);
  CHECK_FALSE(t2.pass);
  const double a1sq = std::norm((1.0 + std::polar(1.0, kTwoPi * kA)) / 2.0);
  CHECK(a1sq == doctest::Approx(std::cos(std::numbers::pi * kA) *
                                std::cos(std::numbers::pi * kA)));
  CHECK(t2.rows[0].cpp_residual == doctest::Approx(1.0 - a1sq).epsilon(2e-2));
}

TEST_CASE("parseval: trigonometric polynomial is exactly honoured") {
  const FnD f = [](const Point& t) {
    return 2.0 + 3.0 * std::polar(1.0, kTwoPi * t[0]);
  };
  auto pr = parseval_check(f, 1, VanHoveFamily::symmetric(),
                           {Point{0.0}, Point{1.0}}, 500);
  CHECK(pr.mean_sq == doctest::Approx(13.0).epsilon(1e-9));
  CHECK(pr.sum_sq == doctest::Approx(13.0).epsilon(1e-9));
  CHECK(std::abs(pr.deficit) < 1e-6);
  CHECK(pr.deficit >= -1e-6);  // Bessel
}

TEST_CASE("parseval: step function splits mass between mean and coefficient") {
  std::vector<Point> freqs{Point{0.0}};
  for (int k = 1; k <= 10; ++k) {
    freqs.push_back(Point{static_cast<double>(k)});
    freqs.push_back(Point{static_cast<double>(-k)});
  }
  auto pr = parseval_check(lift(step_ramp_function()), 1,
                           VanHoveFamily::symmetric(), freqs, 2000);
  CHECK(pr.mean_sq == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(std::abs(pr.coefficients[0]) == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(pr.deficit == doctest::Approx(0.25).epsilon(1e-2));
  CHECK(pr.deficit >= -1e-6);
}

TEST_CASE("parseval: duplicate frequencies are not double counted") {
  const FnD f = [](const Point& t) {
    return 2.0 + 3.0 * std::polar(1.0, kTwoPi * t[0]);
  };
  auto pr = parseval_check(f, 1, VanHoveFamily::symmetric(),
                           {Point{0.0}, Point{0.0}, Point{1.0}}, 200);
  CHECK(pr.freqs.size() == 2);
  CHECK(std::abs(pr.deficit) < 1e-6);
}

TEST_CASE("peak_scan: lattice peaks at the integers") {
  auto z = lattice_comb(-600, 600);
  auto peaks = peak_scan(z, VanHoveFamily::symmetric(), 0.0, 2.5, 2.5e-4, 500, 0.5);
  REQUIRE(peaks.size() == 3);
  CHECK(std::abs(peaks[0]) < 1e-6);
  CHECK(std::abs(peaks[1] - 1.0) < 1e-6);
  CHECK(std::abs(peaks[2] - 2.0) < 1e-6);
}

TEST_CASE("peak_scan: fibonacci peaks sit on the projected dual module") {
  auto comb = fibonacci_comb(-700.0, 700.0);
  auto peaks = peak_scan(comb, VanHoveFamily::symmetric(), 0.05, 2.0, 2.5e-4,
                         500, 0.3);
  auto table = bragg_spectrum(CutProjectScheme::fibonacci(), 2.0, 0.3 * 0.3);
  REQUIRE(!peaks.empty());
  for (double p : peaks) {
    double best = 1e9;
    for (const auto& row : table.rows) best = std::min(best, std::abs(p - row.freq[0]));
    CHECK(best < 1e-4);
  }
}

TEST_CASE("peak_scan: empty comb yields no peaks") {
  WeightedDiracComb empty(1, {}, {}, BoxWindow::interval(-1000, 1000));
  auto peaks = peak_scan(empty, VanHoveFamily::symmetric(), 0.0, 2.0, 1e-3, 500, 0.1);
  CHECK(peaks.empty());
}

TEST_CASE("FB-of-convolution identity: a_k(mu * phi) = phi_hat(k) a_k(mu)") {
  const TentFunction tent = TentFunction::width(0.5);
  for (const auto* name : {"lattice", "a_defect"}) {
    auto mu = make_fixture(name, {}, -2200.0, 2200.0);
    SmoothedComb f(mu, tent);
    const FnD fn = [&](const Point& t) { return f(t); };
    const long n = 2000;
    std::vector<Point> freqs{Point{0.0}, Point{1.0}, Point{2.0}};
    const auto wi = window_integrals(fn, 1, VanHoveFamily::symmetric().window(n),
                                     freqs, -1.0, {});
    for (std::size_t i = 0; i < freqs.size(); ++i) {
      const complexd ak_mu = fourier_bohr_window(
          mu, freqs[i], VanHoveFamily::symmetric().window(n));
      const complexd expect = tent_fourier(tent, freqs[i]) * ak_mu;
      CHECK(std::abs(wi.fb[i] - expect) < 5e-3);
    }
  }
}

TEST_CASE("boundary-error lemma: unnormalised windowed integrals") {
  // | int_{A_n} (phi*mu) chi_k - phi_hat(k) int_{A_n} chi_k dmu |
  //   <= sup|phi|*|mu| * |d^K A_n| with K = supp(phi).
  auto mu = lattice_comb(-1300, 1300);
  const TentFunction tent = TentFunction::width(1.0);
  SmoothedComb f(mu, tent);
  const FnD fn = [&](const Point& t) { return f(t); };
  const double sup_smoothed = 1.0;  // partition of unity
  for (long n : {10L, 100L, 1000L}) {
    const BoxWindow A = VanHoveFamily::symmetric().window(n);
    const BoxWindow K = tent.support();
    for (double k : {0.0, 1.0, 0.37}) {
      const auto wi = window_integrals(fn, 1, A, {{Point{k}}}, -1.0, {});
      const complexd lhs1 = wi.fb[0] * A.volume();
      const complexd lhs2 =
          tent_fourier(tent, k) * fourier_bohr_window(mu, Point{k}, A) * A.volume();
      const double bound = sup_smoothed * A.k_boundary_volume(K);
      CHECK(std::abs(lhs1 - lhs2) <= bound + 1e-6 * A.volume());
    }
  }
}

TEST_CASE("eberlein-FB product rule for the smoothed lattice") {
  // a_k(f (*) reflected-conjugate f) = |a_k(f)|^2 for f = delta_Z * tent(0.5).
  // f (*) f~ is 1-periodic, so its FB coefficient at integer k is the integral
  // over one period.
  auto mu = lattice_comb(-700, 700);
  const TentFunction tent = TentFunction::width(0.5);
  SmoothedComb f(mu, tent);
  const FnD fn = [&](const Point& t) { return f(t); };
  const FnD fn_refl_conj = [&](const Point& t) { return std::conj(f(negate(t))); };

  const int grid = 32;
  std::vector<Point> ts;
  for (int i = 0; i < grid; ++i)
    ts.push_back(Point{static_cast<double>(i) / grid});
  auto conv = eberlein_fn(fn, fn_refl_conj, 1, VanHoveFamily::symmetric(),
                          NRange::geometric_with_tail(100, 400, 2, 5), ts);
  for (double k : {0.0, 1.0}) {
    complexd ak{};
    for (int i = 0; i < grid; ++i)
      ak += conv.limits[i] *
            std::polar(1.0, -kTwoPi * k * ts[i][0]) / static_cast<double>(grid);
    const complexd ak_f = tent_fourier(tent, k);  // a_k(f) for the unit lattice
    CHECK(std::abs(ak - ak_f * std::conj(ak_f)) < 5e-3);
  }
}
