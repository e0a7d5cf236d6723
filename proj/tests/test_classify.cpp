#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diffract/classify.hpp"
#include "diffract/fixtures.hpp"
#include "diffract/model_sets.hpp"

using namespace diffract;

namespace {
const double kA = std::sqrt(2.0) - 1.0;

std::vector<Point> integer_freqs(int k_max) {
  std::vector<Point> out{Point{0.0}};
  for (int k = 1; k <= k_max; ++k) {
    out.push_back(Point{static_cast<double>(k)});
    out.push_back(Point{static_cast<double>(-k)});
  }
  return out;
}
}  // namespace

TEST_CASE("mean_ap_delone: the lattice has almost periods exactly at Z") {
  auto z = lattice_comb(-1100, 1100);
  auto rep = mean_ap_delone(z, 0.1, 0.05, VanHoveFamily::symmetric(), 0.0, 20.0,
                            0.25, 1000);
  REQUIRE(!rep.almost_periods.empty());
  CHECK(rep.almost_periods.size() == 21);
  for (double t : rep.almost_periods)
    CHECK(std::abs(t - std::round(t)) < 1e-12);
  CHECK(rep.max_gap == doctest::Approx(1.0));
  CHECK(rep.relatively_dense);
}

TEST_CASE("mean_ap_delone: a-defect defect densities at integer and half shifts") {
  auto mu = a_defect_comb(kA, -2200.0, 2200.0);
  // the defect of t+Lambda_a vs Lambda_a occupies [~-t, t+1], so keep the
  // scan short relative to n: d(t) ~ 2t/|A_n|
  auto rep = mean_ap_delone(mu, 0.1, 0.05, VanHoveFamily::symmetric(), 0.0, 10.0,
                            0.5, 2000);
  // integer translations repair everything but a compactly supported defect
  for (std::size_t i = 0; i < rep.t_values.size(); ++i) {
    const double t = rep.t_values[i];
    if (std::abs(t - std::round(t)) < 1e-12) {
      CHECK(rep.defect_density[i] < 1e-2);
    } else {
      // half-integer shifts mismatch both copies entirely
      CHECK(rep.defect_density[i] == doctest::Approx(2.0).epsilon(0.1));
    }
  }
  CHECK(rep.relatively_dense);
}

TEST_CASE("mean_ap_meyer agrees with the delone scan at match_tol on Z") {
  auto z = lattice_comb(-1100, 1100);
  auto rd = mean_ap_delone(z, kMatchTol, 0.05, VanHoveFamily::symmetric(), 0.0,
                           10.0, 0.5, 1000);
  auto rm = mean_ap_meyer(z, 0.05, VanHoveFamily::symmetric(), 0.0, 10.0, 0.5,
                          1000);
  REQUIRE(rd.t_values.size() == rm.t_values.size());
  for (std::size_t i = 0; i < rd.t_values.size(); ++i)
    CHECK(rd.defect_density[i] == rm.defect_density[i]);

  auto mu = a_defect_comb(kA, -1100.0, 1100.0);
  auto md = mean_ap_delone(mu, kMatchTol, 0.05, VanHoveFamily::symmetric(), 0.0,
                           5.0, 1.0, 1000);
  auto mm = mean_ap_meyer(mu, 0.05, VanHoveFamily::symmetric(), 0.0, 5.0, 1.0,
                          1000);
  for (std::size_t i = 0; i < md.t_values.size(); ++i)
    CHECK(md.defect_density[i] == mm.defect_density[i]);
}

TEST_CASE("epsilon-monotonicity of the almost period set") {
  auto mu = a_defect_comb(kA, -1100.0, 1100.0);
  auto tight = mean_ap_delone(mu, 0.1, 0.01, VanHoveFamily::symmetric(), 0.0,
                              15.0, 0.25, 1000);
  auto loose = mean_ap_delone(mu, 0.1, 0.3, VanHoveFamily::symmetric(), 0.0,
                              15.0, 0.25, 1000);
  for (double t : tight.almost_periods) {
    bool found = false;
    for (double s : loose.almost_periods)
      if (s == t) found = true;
    CHECK(found);
  }
}

TEST_CASE("mean_ap_meyer on the fibonacci return-vector grid") {
  auto comb = fibonacci_comb(-2200.0, 2200.0);
  const auto grid = return_vectors(comb, 50.0);
  auto rep = mean_ap_meyer(comb, 0.1, VanHoveFamily::symmetric(), grid, 2000);
  REQUIRE(!rep.almost_periods.empty());
  // the scan itself is the oracle; record and bound the observed gap
  CHECK(rep.max_gap <= 18.0);
  // phi^5 = 11.09 is the first nonzero almost period at epsilon = 0.1
  bool has_phi5 = false;
  for (double t : rep.almost_periods)
    if (std::abs(t - 11.0901699) < 1e-5) has_phi5 = true;
  CHECK(has_phi5);
}

TEST_CASE("besicovitch_classify: lattice passes, a-defect splits by family") {
  const TentFunction tent = TentFunction::width(0.5);
  auto freqs = integer_freqs(20);

  auto z = lattice_comb(-2200, 2200);
  auto ev = besicovitch_classify(z, tent, VanHoveFamily::symmetric(), freqs,
                                 2000);
  CHECK(ev.pass);
  CHECK(ev.deficit < 1e-2);
  CHECK(ev.mean_sq == doctest::Approx(1.0 / 3.0).epsilon(1e-2));

  auto mu = a_defect_comb(kA, -2200.0, 2200.0);
  auto ev2 = besicovitch_classify(mu, tent, VanHoveFamily::symmetric(), freqs,
                                  2000);
  CHECK_FALSE(ev2.pass);
  CHECK(ev2.deficit > 1e-2);

  // along the quadratic family the defect is negligible
  auto mu3 = a_defect_comb(kA, -200.0, 150.0 * 150.0 + 100.0);
  auto ev3 = besicovitch_classify(mu3, tent, VanHoveFamily::quadratic(), freqs,
                                  150, 2e-2);
  CHECK(ev3.pass);
  CHECK(ev3.deficit < 2e-2);
}

TEST_CASE("weyl_classify: lattice earns the weyl verdict") {
  auto z = lattice_comb(-2400, 4400);  // skew(2) windows reach 2n on the right
  ClassifyOptions opt;
  opt.t_max = 20.0;
  auto v = weyl_classify(z, TentFunction::width(0.5),
                         {VanHoveFamily::symmetric(), VanHoveFamily::skew(2.0)},
                         ShiftGrid::explicit_shifts({0.0, 0.3, 7.1}),
                         integer_freqs(2), 2000, opt);
  CHECK(v.verdict == ApClass::weyl);
  CHECK(v.weyl.pass);
  CHECK(v.besicovitch.pass);
  CHECK(v.mean.pass);
}

TEST_CASE("weyl_classify: fibonacci model set is weyl almost periodic") {
  auto comb = fibonacci_comb(-4400.0, 8800.0);  // covers skew(2) windows
  // candidate frequencies: the closed-form Bragg peaks
  auto table = bragg_spectrum(CutProjectScheme::fibonacci(), 4.0, 1e-3);
  std::vector<Point> freqs;
  for (const auto& row : table.rows) freqs.push_back(row.freq);
  ClassifyOptions opt;
  opt.deficit_tol = 2e-2;  // finite candidate set truncates the spectral tail
  opt.t_max = 30.0;
  auto v = weyl_classify(comb, TentFunction::width(0.5),
                         {VanHoveFamily::symmetric(), VanHoveFamily::skew(2.0)},
                         ShiftGrid::explicit_shifts({0.0, 50.0}), freqs, 4000,
                         opt);
  CHECK(v.verdict == ApClass::weyl);
  CHECK(v.weyl.besicovitch_every_family);
  CHECK(v.weyl.fb_uniform);
}

TEST_CASE("weyl_classify: exponential blocks stop at besicovitch") {
  const double big = std::pow(2.0, 14.0);
  auto mu = exponential_blocks_comb(-40000.0, 40000.0);
  ClassifyOptions opt;
  opt.t_max = 20.0;  // every difference up to 20 occurs across the blocks
  opt.uniform_ns = NRange::consecutive(5, 14);
  opt.uniform_conv.tol = 6e-2;
  opt.uniform_tol = 1e-1;
  auto v = weyl_classify(mu, TentFunction::width(1.0),
                         {VanHoveFamily::symmetric()},
                         ShiftGrid::explicit_shifts({0.0, big}),
                         {Point{0.0}}, 1 << 14, opt);
  CHECK(v.verdict == ApClass::besicovitch);
  CHECK(v.besicovitch.pass);
  CHECK_FALSE(v.weyl.pass);
  CHECK_FALSE(v.weyl.fb_uniform);
}

TEST_CASE("verdict hierarchy is structurally enforced") {
  auto z = lattice_comb(-1200, 1200);
  ClassifyOptions opt;
  opt.t_max = 10.0;
  auto v = weyl_classify(z, TentFunction::width(0.5),
                         {VanHoveFamily::symmetric()},
                         ShiftGrid::explicit_shifts({0.0, 0.4}),
                         integer_freqs(1), 1000, opt);
  if (v.verdict == ApClass::weyl) {
    CHECK(v.besicovitch.pass);
    CHECK(v.mean.pass);
  }
  if (v.verdict == ApClass::besicovitch) CHECK(v.mean.pass);
}

TEST_CASE("return_vectors: lattice differences are the integers") {
  auto z = lattice_comb(-100, 100);
  auto rv = return_vectors(z, 10.0);
  REQUIRE(rv.size() == 11);
  for (std::size_t i = 0; i < rv.size(); ++i)
    CHECK(rv[i] == doctest::Approx(static_cast<double>(i)));
}
