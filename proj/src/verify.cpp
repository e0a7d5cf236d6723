#include "diffract/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "diffract/classify.hpp"
#include "diffract/correlation.hpp"
#include "diffract/fixtures.hpp"
#include "diffract/model_sets.hpp"
#include "diffract/spectrum.hpp"

namespace diffract {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kDefectA = std::sqrt(2.0) - 1.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SuiteBuilder {
  VerifySuite suite;
  Clock::time_point row_start = Clock::now();

  explicit SuiteBuilder(std::string name) { suite.name = std::move(name); }

  void tick() { row_start = Clock::now(); }

  // two-sided: |measured - expected| < tol
  void close(const std::string& id, const std::string& desc, double measured,
             double expected, double tol) {
    VerifyRow row{id, desc, measured, expected, tol,
                  std::abs(measured - expected) < tol, seconds_since(row_start)};
    suite.rows.push_back(row);
    tick();
  }

  // one-sided: measured < bound
  void below(const std::string& id, const std::string& desc, double measured,
             double bound) {
    VerifyRow row{id, desc + " (must stay below)", measured, bound, bound,
                  measured < bound, seconds_since(row_start)};
    suite.rows.push_back(row);
    tick();
  }

  // one-sided: measured > bound
  void above(const std::string& id, const std::string& desc, double measured,
             double bound) {
    VerifyRow row{id, desc + " (must exceed)", measured, bound, bound,
                  measured > bound, seconds_since(row_start)};
    suite.rows.push_back(row);
    tick();
  }

  void flag(const std::string& id, const std::string& desc, bool ok) {
    VerifyRow row{id, desc, ok ? 1.0 : 0.0, 1.0, 0.5, ok, seconds_since(row_start)};
    suite.rows.push_back(row);
    tick();
  }

  void runtime(const std::string& id, double measured, double bound) {
    VerifyRow row{id, "runtime seconds", measured, bound, bound,
                  measured < bound, 0.0};
    suite.rows.push_back(row);
    tick();
  }
};

std::vector<Point> integer_freqs(int k_max) {
  std::vector<Point> out{Point{0.0}};
  for (int k = 1; k <= k_max; ++k) {
    out.push_back(Point{static_cast<double>(k)});
    out.push_back(Point{static_cast<double>(-k)});
  }
  return out;
}

// Criterion 1: Fourier-Bohr coefficients of the a-defect along skew windows.
VerifySuite suite_adefect_fb() {
  SuiteBuilder b("adefect-fb");
  const auto start = Clock::now();
  const long n = 10000;
  auto mu = a_defect_comb(kDefectA, -10200.0, 2.0 * 10000.0 + 200.0);
  const NRange ns = NRange::geometric_with_tail(1000, n, 4, 10);
  for (double ratio : {1.0, 2.0}) {
    const auto fam = VanHoveFamily::skew(ratio);
    for (double lam : {1.0, 2.0}) {
      const auto rep = fourier_bohr(mu, Point{lam}, fam, ns);
      const complexd expect =
          (1.0 + ratio * std::polar(1.0, kTwoPi * lam * kDefectA)) / (ratio + 1.0);
      std::ostringstream id;
      id << "1.fb.b" << ratio << ".lam" << lam;
      b.close(id.str(), "a-defect coefficient vs (1+b e^{2 pi i lam a})/(b+1)",
              std::abs(rep.value() - expect), 0.0, 2e-2);
    }
  }
  b.runtime("1.runtime", seconds_since(start), 5.0);
  return b.suite;
}

// Criterion 2: the a-defect autocorrelation is the integer lattice comb.
VerifySuite suite_adefect_autocorrelation() {
  SuiteBuilder b("adefect-autocorrelation");
  const auto start = Clock::now();
  const long n = 10000;
  auto mu = a_defect_comb(kDefectA, -10200.0, 10200.0);
  const auto gamma = autocorrelation(mu, VanHoveFamily::symmetric(), n,
                                     AutocorrOptions{1e-6, 6.0});
  double worst_on = 0.0;
  for (long z = -5; z <= 5; ++z)
    worst_on = std::max(worst_on,
                        std::abs(gamma.eta(static_cast<double>(z)) - 1.0));
  b.close("2.eta.integers", "max |eta(z) - 1| over z in {-5..5}", worst_on, 0.0,
          2e-2);
  double worst_off = 0.0;
  for (std::size_t i = 0; i < gamma.diffs.size(); ++i) {
    const double z = gamma.diffs.point(i)[0];
    if (std::abs(z - std::round(z)) > 1e-6)
      worst_off = std::max(worst_off, std::abs(gamma.diffs.weight(i)));
  }
  b.below("2.eta.spurious", "largest |eta| off the integers", worst_off, 2e-2);
  b.flag("2.hermitian", "eta(-z) = conj(eta(z))", gamma.hermitian_defect() < 1e-9);
  b.runtime("2.runtime", seconds_since(start), 30.0);
  return b.suite;
}

// Criterion 3: consistent-phase-property failure of the a-defect.
VerifySuite suite_adefect_cpp() {
  SuiteBuilder b("adefect-cpp");
  auto mu = a_defect_comb(kDefectA, -10200.0, 10200.0);
  const auto table =
      cpp_check(mu, VanHoveFamily::symmetric(), {Point{1.0}}, 10000, 1e-2);
  const double expected_residual =
      1.0 - std::pow(std::cos(std::numbers::pi * kDefectA), 2.0);
  b.close("3.residual", "CPP residual at lambda = 1 vs 1 - cos^2(pi a)",
          table.rows[0].cpp_residual, expected_residual, 2e-2);
  b.flag("3.verdict", "cpp_check reports failure", !table.pass);
  return b.suite;
}

// Criterion 4: Fourier-Bohr non-existence along the alternating family.
VerifySuite suite_adefect_oscillation() {
  SuiteBuilder b("adefect-oscillation");
  auto mu = a_defect_comb(kDefectA, -10200.0, 3.0 * 10000.0 + 200.0);
  const auto rep = fourier_bohr(mu, Point{1.0}, VanHoveFamily::alternating(),
                                NRange::geometric_with_tail(1000, 10000, 4, 10));
  b.flag("4.status", "status oscillating with two clusters",
         rep.oscillating() && rep.clusters.size() == 2);
  const complexd even_c = (1.0 + 3.0 * std::polar(1.0, kTwoPi * kDefectA)) / 4.0;
  const complexd odd_c = (1.0 + std::polar(1.0, kTwoPi * kDefectA)) / 2.0;
  double d_even = 1e9, d_odd = 1e9;
  for (const auto& c : rep.clusters) {
    d_even = std::min(d_even, std::abs(c - even_c));
    d_odd = std::min(d_odd, std::abs(c - odd_c));
  }
  b.close("4.cluster.even", "cluster vs (1+3e^{2 pi i a})/4", d_even, 0.0, 2e-2);
  b.close("4.cluster.odd", "cluster vs (1+e^{2 pi i a})/2", d_odd, 0.0, 2e-2);
  return b.suite;
}

// Criterion 10: mean-almost-periodicity scan of the a-defect.
VerifySuite suite_adefect_meanap() {
  SuiteBuilder b("adefect-meanap");
  auto mu = a_defect_comb(kDefectA, -10300.0, 10300.0);
  const auto rep = mean_ap_delone(mu, 0.1, 1e-2, VanHoveFamily::symmetric(), 0.0,
                                  20.0, 0.5, 10000);
  double worst_integer_defect = 0.0;
  std::size_t integer_periods = 0;
  double defect_at_half = -1.0;
  for (std::size_t i = 0; i < rep.t_values.size(); ++i) {
    const double t = rep.t_values[i];
    if (std::abs(t - std::round(t)) < 1e-12) {
      worst_integer_defect = std::max(worst_integer_defect, rep.defect_density[i]);
      if (rep.defect_density[i] < 1e-2) ++integer_periods;
    }
    if (std::abs(t - 0.5) < 1e-12) defect_at_half = rep.defect_density[i];
  }
  b.flag("10.periods", "every integer t in [0, 20] is an almost period",
         integer_periods == 21);
  b.below("10.defect.int", "max defect density over integer t",
          worst_integer_defect, 1e-2);
  b.close("10.defect.half", "defect density at t = 0.5 (counting oracle)",
          defect_at_half, 2.0, 0.1);
  return b.suite;
}

// Criterion 7: the lattice oracle.
VerifySuite suite_lattice() {
  SuiteBuilder b("lattice");
  auto z = lattice_comb(-10200.0, 10200.0);
  const auto table = cpp_check(z, VanHoveFamily::symmetric(), integer_freqs(2),
                               10000, 1e-2);
  double worst = 0.0;
  for (const auto& row : table.rows) worst = std::max(worst, row.cpp_residual);
  b.below("7.cpp", "max CPP residual over k in {0, +-1, +-2}", worst, 1e-2);
  b.flag("7.verdict", "cpp_check passes", table.pass);

  const auto gamma = autocorrelation(z, VanHoveFamily::symmetric(), 10000,
                                     AutocorrOptions{1e-6, 100.0});
  const auto rep = diffraction_intensity(gamma, Point{0.5},
                                         VanHoveFamily::symmetric(),
                                         NRange::geometric_with_tail(12, 100, 4, 10));
  b.below("7.poisson", "intensity estimate at k = 0.5 (Poisson oracle: 0)",
          std::abs(intensity_value(rep, 1e-2)), 1e-2);
  return b.suite;
}

// Criterion 5: Besicovitch membership depends on the family.
VerifySuite suite_besicovitch_split() {
  SuiteBuilder b("besicovitch-split");
  const auto freqs = integer_freqs(20);
  const TentFunction tent = TentFunction::width(0.5);
  {
    auto mu = a_defect_comb(kDefectA, -10200.0, 10200.0);
    SmoothedComb f(mu, tent);
    const FnD fn = [&](const Point& t) { return f(t); };
    const auto pr =
        parseval_check(fn, 1, VanHoveFamily::symmetric(), freqs, 10000);
    b.above("5.deficit.symmetric", "Parseval deficit along [-n, n] at n = 1e4",
            pr.deficit, 1e-2);
  }
  {
    auto mu = a_defect_comb(kDefectA, -300.0, 100.0 * 100.0 + 200.0);
    SmoothedComb f(mu, tent);
    const FnD fn = [&](const Point& t) { return f(t); };
    const auto pr =
        parseval_check(fn, 1, VanHoveFamily::quadratic(), freqs, 100);
    b.below("5.deficit.quadratic", "Parseval deficit along [-n, n^2] at n = 100",
            pr.deficit, 2e-2);
  }
  return b.suite;
}

// Criterion 6: the ramp step function solves nothing.
VerifySuite suite_step() {
  SuiteBuilder b("step");
  const auto pr = parseval_check(lift(step_ramp_function()), 1,
                                 VanHoveFamily::symmetric(), integer_freqs(10),
                                 10000);
  b.close("6.mean_sq", "M(|f|^2)", pr.mean_sq, 0.5, 1e-2);
  b.close("6.a0", "|a_0|", std::abs(pr.coefficients[0]), 0.5, 1e-2);
  b.close("6.deficit", "Parseval deficit", pr.deficit, 0.25, 2e-2);
  return b.suite;
}

// Criterion 8: the Fibonacci model set, closed forms against measurements.
VerifySuite suite_fibonacci() {
  SuiteBuilder b("fibonacci");
  const auto start = Clock::now();
  const auto cps = CutProjectScheme::fibonacci();
  auto comb = generate_model_set(cps, -10200.0, 10200.0, 2.0);

  const double count =
      static_cast<double>(comb.count_in(BoxWindow::interval(-10000, 10000)));
  b.close("8.density", "atom count / |window| vs phi/sqrt(5)", count / 20000.0,
          cps.model_set_density(), 1e-2);

  // top-5 Bragg peaks by closed-form intensity, k > 0
  auto table = bragg_spectrum(cps, 4.0, 1e-3);
  std::vector<SpectrumRow> rows;
  for (const auto& row : table.rows)
    if (row.freq[0] > 1e-9) rows.push_back(row);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& bb) {
    return a.intensity > bb.intensity;
  });
  rows.resize(5);
  const BoxWindow A = VanHoveFamily::symmetric().window(10000);
  double worst_peak = 0.0;
  for (const auto& row : rows) {
    const complexd meas = fourier_bohr_window(comb, row.freq, A);
    worst_peak = std::max(worst_peak, std::abs(std::norm(meas) - row.intensity));
  }
  b.close("8.bragg", "max | |a_k|^2 - dens^2 |1W-check(k*)|^2 | over top-5 peaks",
          worst_peak, 0.0, 5e-2);

  const auto gamma = autocorrelation(comb, VanHoveFamily::symmetric(), 10000,
                                     AutocorrOptions{1e-6, 8.0});
  // ten smallest nonnegative difference vectors
  std::vector<double> zs;
  for (std::size_t i = 0; i < gamma.diffs.size(); ++i) {
    const double z = gamma.diffs.point(i)[0];
    if (z > -1e-9) zs.push_back(z);
  }
  std::sort(zs.begin(), zs.end());
  if (zs.size() > 10) zs.resize(10);
  double worst_eta = 0.0;
  for (double z : zs) {
    const double zstar = star_map(cps, z, 10.0, 1e-6);
    const double closed =
        cps.lattice_density() * window_overlap(cps.win_lo, cps.win_hi, zstar);
    worst_eta =
        std::max(worst_eta, std::abs(gamma.eta(z).real() - closed));
  }
  b.close("8.autocorr", "max |eta(z) - dens overlap(W, z*+W)| over 10 smallest z",
          worst_eta, 0.0, 5e-2);
  b.runtime("8.runtime", seconds_since(start), 60.0);
  return b.suite;
}

// Criterion 9: Besicovitch-but-not-Weyl for the exponential block comb.
VerifySuite suite_weylsplit() {
  SuiteBuilder b("weylsplit");
  const long n = 1 << 14;
  auto mu = exponential_blocks_comb(-2.0 * n - 64.0, 2.0 * n + 64.0);
  SmoothedComb f(mu, TentFunction::width(1.0));
  const FnD fn = [&](const Point& t) { return f(t); };

  const auto bes = besicovitch_seminorm(fn, 1, 1.0, VanHoveFamily::symmetric(),
                                        NRange::single(n));
  const double measured = bes.estimates.back().real();
  const double envelope =
      std::pow(std::log2(static_cast<double>(n) + 1.0), 2.0) / (2.0 * n);
  b.below("9.besicovitch", "p=1 seminorm estimate at n = 2^14", measured, 0.05);
  b.flag("9.envelope", "estimate below the log^2(n)/2n envelope",
         measured <= envelope);

  const auto shifts = ShiftGrid::explicit_shifts(
      {0.0, static_cast<double>(n), static_cast<double>(n) + 7.0});
  const auto weyl = weyl_seminorm(fn, 1, 1.0, VanHoveFamily::symmetric(),
                                  NRange::consecutive(2, 8), shifts);
  double best = 0.0;
  for (const auto& e : weyl.estimates) best = std::max(best, e.real());
  b.above("9.weyl", "shift-grid Weyl estimate including shift 2^14", best, 0.5);
  return b.suite;
}

// Oscillation suite: limits that must fail to exist do fail.
VerifySuite suite_nonexistence() {
  SuiteBuilder b("nonexistence");
  {
    auto mu = a_defect_comb(kDefectA, -5200.0, 3.0 * 5000.0 + 200.0);
    const auto rep = fourier_bohr(mu, Point{1.0}, VanHoveFamily::alternating(),
                                  NRange::geometric_with_tail(500, 5000, 4, 10));
    b.flag("ne.fb", "a-defect coefficient oscillates along alternating windows",
           rep.oscillating());
  }
  {
    auto mu = n_minus_2n_comb(-3.0 * 5000.0 - 200.0, 3.0 * 5000.0 + 200.0);
    const auto rep = pair_correlation(mu, Point{1.0}, VanHoveFamily::alternating(),
                                      NRange::geometric_with_tail(500, 5000, 4, 10));
    b.flag("ne.pair", "{n, -2n} pair correlation oscillates along alternating",
           rep.oscillating() && rep.clusters.size() == 2);
    if (rep.clusters.size() == 2) {
      b.close("ne.pair.odd", "odd-window cluster", rep.clusters[0].real(), 0.5,
              5e-3);
      b.close("ne.pair.even", "even-window cluster", rep.clusters[1].real(), 0.75,
              5e-3);
    }
  }
  return b.suite;
}

// Criterion 11: the invariant suites.
VerifySuite suite_invariants() {
  SuiteBuilder b("invariants");
  const auto start = Clock::now();
  const TentFunction half_tent = TentFunction::width(0.5);

  // FB-of-convolution identity on both reference combs
  for (const char* name : {"lattice", "a_defect"}) {
    auto mu = make_fixture(name, {}, -10200.0, 10200.0);
    SmoothedComb f(mu, half_tent);
    const FnD fn = [&](const Point& t) { return f(t); };
    const BoxWindow A = VanHoveFamily::symmetric().window(10000);
    const std::vector<Point> ks{Point{0.0}, Point{1.0}, Point{2.0}};
    const auto wi = window_integrals(fn, 1, A, ks, 2.0, {});
    double worst = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const complexd two_route =
          tent_fourier(half_tent, ks[i]) * fourier_bohr_window(mu, ks[i], A);
      worst = std::max(worst, std::abs(wi.fb[i] - two_route));
    }
    b.close(std::string("11.fbconv.") + name,
            "a_k(mu*phi) vs phi_hat(k) a_k(mu), k in {0,1,2}", worst, 0.0, 5e-3);

    // smoothing identity: M(|mu*phi|^2) = sum_z eta(z) (phi*phi~)(z)
    const auto gamma = autocorrelation(mu, VanHoveFamily::symmetric(), 10000,
                                       AutocorrOptions{1e-6, 3.0});
    complexd via_eta{};
    for (std::size_t i = 0; i < gamma.diffs.size(); ++i)
      via_eta += gamma.diffs.weight(i) *
                 tent_self_convolution(half_tent, gamma.diffs.point(i));
    b.close(std::string("11.smoothing.") + name,
            "windowed M(|mu*phi|^2) vs sum eta(z)(phi*phi~)(z)",
            std::abs(complexd{wi.mean_abs_p, 0.0} - via_eta), 0.0, 5e-3);
  }

  // boundary-error inequality, unnormalised, every tested n
  {
    auto z = lattice_comb(-1300.0, 1300.0);
    const TentFunction tent = TentFunction::width(1.0);
    SmoothedComb f(z, tent);
    const FnD fn = [&](const Point& t) { return f(t); };
    bool ok = true;
    for (long n : {10L, 100L, 1000L}) {
      const BoxWindow A = VanHoveFamily::symmetric().window(n);
      for (double k : {0.0, 1.0, 0.37}) {
        const auto wi = window_integrals(fn, 1, A, {{Point{k}}}, -1.0, {});
        const complexd lhs = wi.fb[0] * A.volume();
        const complexd rhs = tent_fourier(tent, k) *
                             fourier_bohr_window(z, Point{k}, A) * A.volume();
        const double bound = A.k_boundary_volume(tent.support());
        if (std::abs(lhs - rhs) > bound + 1e-6 * A.volume()) ok = false;
      }
    }
    b.flag("11.boundary", "windowed FB boundary-error inequality", ok);
  }

  // Bessel nonnegativity across reference runs
  {
    double worst = 0.0;
    for (const char* name : {"lattice", "a_defect"}) {
      auto mu = make_fixture(name, {}, -2200.0, 2200.0);
      SmoothedComb f(mu, half_tent);
      const FnD fn = [&](const Point& t) { return f(t); };
      const auto pr = parseval_check(fn, 1, VanHoveFamily::symmetric(),
                                     integer_freqs(20), 2000);
      worst = std::min(worst, pr.deficit);
    }
    b.flag("11.bessel", "Parseval deficit >= -1e-6 on the fixture set",
           worst >= -1e-6);
  }

  // seminorm monotonicity in p and Besicovitch <= Weyl, per n
  {
    auto mu = a_defect_comb(kDefectA, -1300.0, 1300.0);
    SmoothedComb f(mu, half_tent);
    const FnD fn = [&](const Point& t) { return f(t); };
    const NRange ns = NRange::geometric_with_tail(50, 1000, 4, 6);
    const auto p1 =
        besicovitch_seminorm(fn, 1, 1.0, VanHoveFamily::symmetric(), ns);
    const auto p2 =
        besicovitch_seminorm(fn, 1, 2.0, VanHoveFamily::symmetric(), ns);
    bool mono = true;
    for (std::size_t i = 0; i < ns.values.size(); ++i)
      if (p1.estimates[i].real() > p2.estimates[i].real() + 1e-12) mono = false;
    b.flag("11.pmono", "||f||_{b,1} <= ||f||_{b,2} per n", mono);

    const auto grid = ShiftGrid::explicit_shifts({0.0, 13.7, 111.0});
    const auto w2 =
        weyl_seminorm(fn, 1, 2.0, VanHoveFamily::symmetric(), ns, grid);
    bool bw = true;
    for (std::size_t i = 0; i < ns.values.size(); ++i)
      if (p2.estimates[i].real() > w2.estimates[i].real() + 1e-15) bw = false;
    b.flag("11.besweyl", "Besicovitch estimate <= Weyl estimate per n", bw);
  }

  // enlarged-ball property along every built-in family
  {
    auto z = lattice_comb(-1500.0, 10700.0);
    SmoothedComb f(z, TentFunction::width(1.0));
    const FnD fn = [&](const Point& t) { return f(t); };
    const std::vector<VanHoveFamily> families = {
        VanHoveFamily::symmetric(), VanHoveFamily::skew(2.0),
        VanHoveFamily::quadratic(), VanHoveFamily::alternating(),
        VanHoveFamily::shifted(0.5)};
    const auto shifts = ShiftGrid::explicit_shifts(
        {0.0, 0.21, 0.5, 1.7, 3.3, 7.9, 25.5, 60.1});
    const auto rep = enlarged_ball_check(
        fn, 1, BoxWindow::interval(0.0, 1.0), complexd{1.0, 0.0}, 0.01, 0.02,
        families, shifts, NRange::geometric_with_tail(10, 100, 5, 3));
    bool ok = rep.base_ok;
    long max_first_n = 0;
    for (const auto& fr : rep.families) {
      ok = ok && fr.ok;
      max_first_n = std::max(max_first_n, fr.first_good_n);
    }
    b.flag("11.appD", "base window averages in U_0.01(1), families in U_0.02(1)",
           ok);
    b.close("11.appD.N", "largest first good n across families",
            static_cast<double>(max_first_n), 10.0, 90.5);
  }

  b.runtime("11.runtime", seconds_since(start), 120.0);
  return b.suite;
}

using SuiteFn = VerifySuite (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"adefect-fb", suite_adefect_fb},
      {"adefect-autocorrelation", suite_adefect_autocorrelation},
      {"adefect-cpp", suite_adefect_cpp},
      {"adefect-oscillation", suite_adefect_oscillation},
      {"adefect-meanap", suite_adefect_meanap},
      {"lattice", suite_lattice},
      {"besicovitch-split", suite_besicovitch_split},
      {"step", suite_step},
      {"fibonacci", suite_fibonacci},
      {"weylsplit", suite_weylsplit},
      {"nonexistence", suite_nonexistence},
      {"invariants", suite_invariants},
  };
  return reg;
}

}  // namespace

bool VerifySuite::pass() const {
  for (const auto& row : rows)
    if (!row.pass) return false;
  return true;
}

double VerifySuite::seconds() const {
  double total = 0.0;
  for (const auto& row : rows) total += row.seconds;
  return total;
}

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  names.push_back("adefect");  // umbrella
  names.push_back("all");
  return names;
}

std::vector<VerifySuite> run_verify(const std::string& name) {
  std::vector<VerifySuite> out;
  for (const auto& [n, fn] : registry()) {
    const bool umbrella = name == "adefect" && n.rfind("adefect", 0) == 0;
    if (name == "all" || name == n || umbrella) out.push_back(fn());
  }
  if (out.empty()) throw std::runtime_error("unknown verify suite: " + name);
  return out;
}

std::string verify_table(const std::vector<VerifySuite>& suites) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof(line), "%-6s %-28s %14s %14s %10s %8s\n", "state",
                "check", "measured", "expected", "tol", "secs");
  os << line;
  for (const auto& suite : suites) {
    for (const auto& row : suite.rows) {
      std::snprintf(line, sizeof(line), "%-6s %-28s %14.6g %14.6g %10.3g %8.2f\n",
                    row.pass ? "PASS" : "FAIL", row.id.c_str(), row.measured,
                    row.expected, row.tolerance, row.seconds);
      os << line;
    }
    std::snprintf(line, sizeof(line), "%-6s suite %s (%.1fs)\n\n",
                  suite.pass() ? "PASS" : "FAIL", suite.name.c_str(),
                  suite.seconds());
    os << line;
  }
  return os.str();
}

}  // namespace diffract
