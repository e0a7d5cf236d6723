// Python bindings for the main operations: comb fixtures and IO, van Hove
// averaging, seminorms, Fourier-Bohr coefficients, autocorrelation, CPP and
// Parseval checks, cut-and-project spectra, and the almost-periodicity
// classifiers.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diffract/classify.hpp"
#include "diffract/correlation.hpp"
#include "diffract/fixtures.hpp"
#include "diffract/io.hpp"
#include "diffract/model_sets.hpp"
#include "diffract/spectrum.hpp"
#include "diffract/verify.hpp"

namespace py = pybind11;
using namespace diffract;

namespace {

std::vector<Point> to_points(const std::vector<double>& xs) {
  std::vector<Point> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(Point{x});
  return out;
}

NRange range_of(long n_max, long n_min, int coarse, int tail) {
  return NRange::geometric_with_tail(n_min > 0 ? n_min : std::max<long>(2, n_max / 8),
                                     n_max, coarse, tail);
}

FnD smoothed_fn(const WeightedDiracComb& mu, double tent_width) {
  auto f = std::make_shared<SmoothedComb>(mu, TentFunction::width(tent_width));
  return [f](const Point& t) { return (*f)(t); };
}

}  // namespace

PYBIND11_MODULE(_diffract, m) {
  m.doc() = "diffraction-theoretic numerics for point measures on R^d";

  py::register_exception<RegionUnderflow>(m, "RegionUnderflow");
  py::register_exception<NotUniformlyDiscrete>(m, "NotUniformlyDiscrete");
  py::register_exception<SupportUnderflow>(m, "SupportUnderflow");
  py::register_exception<DegenerateBasis>(m, "DegenerateBasis");
  py::register_exception<NotALatticePoint>(m, "NotALatticePoint");
  py::register_exception<UnknownFixture>(m, "UnknownFixture");

  py::class_<VanHoveFamily>(m, "VanHoveFamily")
      .def_static("symmetric", &VanHoveFamily::symmetric, py::arg("dim") = 1)
      .def_static("skew", &VanHoveFamily::skew, py::arg("b"), py::arg("dim") = 1)
      .def_static("quadratic", &VanHoveFamily::quadratic, py::arg("dim") = 1)
      .def_static("alternating", &VanHoveFamily::alternating, py::arg("dim") = 1)
      .def_static("shifted", &VanHoveFamily::shifted, py::arg("rate"),
                  py::arg("dim") = 1)
      .def("boundary_ratio",
           [](const VanHoveFamily& fam, long n, double k_halfwidth) {
             return fam.boundary_ratio(
                 n, fam.dim() == 1
                        ? BoxWindow::interval(-k_halfwidth, k_halfwidth)
                        : BoxWindow::box2(-k_halfwidth, k_halfwidth,
                                          -k_halfwidth, k_halfwidth));
           },
           py::arg("n"), py::arg("k_halfwidth") = 1.0)
      .def_property_readonly("description", &VanHoveFamily::description);

  py::class_<WeightedDiracComb>(m, "WeightedDiracComb")
      .def(py::init([](const std::vector<double>& xs,
                       const std::vector<complexd>& ws, double region_lo,
                       double region_hi, std::optional<double> radius) {
             return WeightedDiracComb(1, to_points(xs), ws,
                                      BoxWindow::interval(region_lo, region_hi),
                                      radius);
           }),
           py::arg("points"), py::arg("weights"), py::arg("region_lo"),
           py::arg("region_hi"), py::arg("discreteness_radius") = std::nullopt)
      .def_property_readonly("dim", &WeightedDiracComb::dim)
      .def("__len__", &WeightedDiracComb::size)
      .def("points",
           [](const WeightedDiracComb& c) {
             std::vector<double> out;
             for (std::size_t i = 0; i < c.size(); ++i)
               out.push_back(c.point(i)[0]);
             return out;
           })
      .def("weights",
           [](const WeightedDiracComb& c) {
             return std::vector<complexd>(c.weights().begin(), c.weights().end());
           })
      .def("count_in",
           [](const WeightedDiracComb& c, double lo, double hi) {
             return c.count_in(BoxWindow::interval(lo, hi));
           })
      .def("translate",
           [](const WeightedDiracComb& c, double t) {
             return translate(c, Point{t});
           })
      .def("restrict",
           [](const WeightedDiracComb& c, double lo, double hi) {
             return restrict(c, BoxWindow::interval(lo, hi));
           })
      .def("smooth",
           [](const WeightedDiracComb& c, double tent_width, double t) {
             return smooth(c, TentFunction::width(tent_width), Point{t});
           },
           py::arg("tent_width"), py::arg("t"));

  py::enum_<ConvergenceStatus>(m, "ConvergenceStatus")
      .value("converged", ConvergenceStatus::converged)
      .value("oscillating", ConvergenceStatus::oscillating)
      .value("undetermined", ConvergenceStatus::undetermined);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("n_values", &ConvergenceReport::n_values)
      .def_readonly("estimates", &ConvergenceReport::estimates)
      .def_readonly("status", &ConvergenceReport::status)
      .def_readonly("limit", &ConvergenceReport::limit)
      .def_readonly("clusters", &ConvergenceReport::clusters)
      .def_readonly("tail_spread", &ConvergenceReport::tail_spread)
      .def("value", &ConvergenceReport::value)
      .def("to_json", [](const ConvergenceReport& r) { return report_to_json(r); })
      .def("to_csv", [](const ConvergenceReport& r) { return report_to_csv(r); });

  // fixtures and IO
  m.def("lattice_comb", &lattice_comb, py::arg("lo"), py::arg("hi"),
        py::arg("spacing") = 1.0);
  m.def("a_defect_comb", &a_defect_comb, py::arg("a"), py::arg("lo"), py::arg("hi"));
  m.def("n_minus_2n_comb", &n_minus_2n_comb, py::arg("lo"), py::arg("hi"));
  m.def("exponential_blocks_comb", &exponential_blocks_comb, py::arg("lo"),
        py::arg("hi"));
  m.def("fibonacci_comb", &fibonacci_comb, py::arg("lo"), py::arg("hi"));
  m.def("read_comb", &read_comb, py::arg("path"));
  m.def("write_comb", &write_comb, py::arg("path"), py::arg("comb"));

  m.def("tent_fourier",
        [](double w, double k) { return tent_fourier(TentFunction::width(w), k); },
        py::arg("tent_width"), py::arg("k"));

  m.def("mean_along",
        [](const WeightedDiracComb& mu, const VanHoveFamily& fam, long n_max,
           long n_min, int coarse, int tail) {
          return mean_along(mu, fam, range_of(n_max, n_min, coarse, tail));
        },
        py::arg("comb"), py::arg("family"), py::arg("n_max"),
        py::arg("n_min") = 0, py::arg("coarse") = 4, py::arg("tail") = 10);

  m.def("fourier_bohr",
        [](const WeightedDiracComb& mu, double k, const VanHoveFamily& fam,
           long n_max, double shift) {
          return fourier_bohr(mu, Point{k}, fam, range_of(n_max, 0, 4, 10),
                              Point{shift});
        },
        py::arg("comb"), py::arg("k"), py::arg("family"), py::arg("n_max"),
        py::arg("shift") = 0.0);

  m.def("fourier_bohr_uniform",
        [](const WeightedDiracComb& mu, double k, const VanHoveFamily& fam,
           long n_max, const std::vector<double>& shifts, double tol) {
          const auto rep = fourier_bohr_uniform(
              mu, Point{k}, fam, range_of(n_max, 0, 4, 10),
              ShiftGrid::explicit_shifts(shifts), tol);
          return py::make_tuple(rep.uniform, rep.spread, rep.limit);
        },
        py::arg("comb"), py::arg("k"), py::arg("family"), py::arg("n_max"),
        py::arg("shifts"), py::arg("tol") = 1e-2);

  m.def("besicovitch_seminorm",
        [](const WeightedDiracComb& mu, double tent_width, double p,
           const VanHoveFamily& fam, long n_max) {
          return besicovitch_seminorm(smoothed_fn(mu, tent_width), 1, p, fam,
                                      range_of(n_max, 0, 4, 8));
        },
        py::arg("comb"), py::arg("tent_width"), py::arg("p"), py::arg("family"),
        py::arg("n_max"));

  m.def("weyl_seminorm",
        [](const WeightedDiracComb& mu, double tent_width, double p,
           const VanHoveFamily& fam, long n_max, const std::vector<double>& shifts) {
          return weyl_seminorm(smoothed_fn(mu, tent_width), 1, p, fam,
                               range_of(n_max, 0, 4, 8),
                               ShiftGrid::explicit_shifts(shifts));
        },
        py::arg("comb"), py::arg("tent_width"), py::arg("p"), py::arg("family"),
        py::arg("n_max"), py::arg("shifts"));

  py::class_<Autocorrelation>(m, "Autocorrelation")
      .def_property_readonly("comb",
                             [](const Autocorrelation& g) { return g.diffs; })
      .def_readonly("n", &Autocorrelation::n)
      .def_readonly("z_max", &Autocorrelation::z_max)
      .def_readonly("boundary_loss_bound", &Autocorrelation::boundary_loss_bound)
      .def("eta", [](const Autocorrelation& g, double z) { return g.eta(z); })
      .def("to_csv",
           [](const Autocorrelation& g) { return autocorrelation_to_csv(g); });

  m.def("autocorrelation",
        [](const WeightedDiracComb& mu, const VanHoveFamily& fam, long n,
           double z_max, double cluster_tol) {
          return autocorrelation(mu, fam, n, AutocorrOptions{cluster_tol, z_max});
        },
        py::arg("comb"), py::arg("family"), py::arg("n"), py::arg("z_max") = 50.0,
        py::arg("cluster_tol") = 1e-6);

  m.def("pair_correlation",
        [](const WeightedDiracComb& mu, double z, const VanHoveFamily& fam,
           long n_max) {
          return pair_correlation(mu, Point{z}, fam, range_of(n_max, 0, 4, 10));
        },
        py::arg("comb"), py::arg("z"), py::arg("family"), py::arg("n_max"));

  m.def("diffraction_intensity",
        [](const Autocorrelation& gamma, double k, long m_max) {
          const auto rep = diffraction_intensity(
              gamma, Point{k}, VanHoveFamily::symmetric(),
              range_of(m_max, 0, 4, 10));
          return intensity_value(rep, 1e-2);
        },
        py::arg("autocorrelation"), py::arg("k"), py::arg("m_max") = 100);

  py::class_<SpectrumRow>(m, "SpectrumRow")
      .def_property_readonly("k", [](const SpectrumRow& r) { return r.freq[0]; })
      .def_readonly("a", &SpectrumRow::a)
      .def_readonly("intensity", &SpectrumRow::intensity)
      .def_readonly("cpp_residual", &SpectrumRow::cpp_residual)
      .def_readonly("status", &SpectrumRow::status);

  py::class_<SpectrumTable>(m, "SpectrumTable")
      .def_readonly("rows", &SpectrumTable::rows)
      .def_readonly("pass_", &SpectrumTable::pass)
      .def("to_csv", [](const SpectrumTable& t) { return spectrum_to_csv(t); })
      .def("to_json", [](const SpectrumTable& t) { return spectrum_to_json(t); });

  m.def("cpp_check",
        [](const WeightedDiracComb& mu, const VanHoveFamily& fam,
           const std::vector<double>& freqs, long n, double tol, double z_max) {
          CppOptions opt;
          opt.z_max = z_max;
          return cpp_check(mu, fam, to_points(freqs), n, tol, opt);
        },
        py::arg("comb"), py::arg("family"), py::arg("freqs"), py::arg("n"),
        py::arg("tol") = 1e-2, py::arg("z_max") = 0.0);  // 0: scale with n

  m.def("parseval_check",
        [](const WeightedDiracComb& mu, double tent_width, const VanHoveFamily& fam,
           const std::vector<double>& freqs, long n) {
          const auto rep =
              parseval_check(smoothed_fn(mu, tent_width), 1, fam, to_points(freqs), n);
          py::dict out;
          out["mean_sq"] = rep.mean_sq;
          out["sum_sq"] = rep.sum_sq;
          out["deficit"] = rep.deficit;
          return out;
        },
        py::arg("comb"), py::arg("tent_width"), py::arg("family"),
        py::arg("freqs"), py::arg("n"));

  m.def("peak_scan",
        [](const WeightedDiracComb& mu, const VanHoveFamily& fam, double k_lo,
           double k_hi, double k_step, long n, double threshold) {
          return peak_scan(mu, fam, k_lo, k_hi, k_step, n, threshold);
        },
        py::arg("comb"), py::arg("family"), py::arg("k_lo"), py::arg("k_hi"),
        py::arg("k_step"), py::arg("n"), py::arg("threshold"));

  py::class_<CutProjectScheme>(m, "CutProjectScheme")
      .def(py::init([](const std::vector<double>& basis, double win_lo,
                       double win_hi) {
             if (basis.size() != 4)
               throw std::invalid_argument("basis must have 4 entries (row major)");
             return CutProjectScheme({{{basis[0], basis[1]}, {basis[2], basis[3]}}},
                                     win_lo, win_hi);
           }),
           py::arg("basis"), py::arg("win_lo"), py::arg("win_hi"))
      .def_static("fibonacci", &CutProjectScheme::fibonacci)
      .def_static("identity", &CutProjectScheme::identity, py::arg("lo") = -0.5,
                  py::arg("hi") = 0.5)
      .def_property_readonly("dens", &CutProjectScheme::lattice_density)
      .def_property_readonly("model_set_density",
                             &CutProjectScheme::model_set_density)
      .def("star_map",
           [](const CutProjectScheme& cps, double x, double bound) {
             return star_map(cps, x, bound);
           },
           py::arg("x"), py::arg("internal_bound") = 100.0);

  m.def("generate_model_set",
        [](const CutProjectScheme& cps, double lo, double hi, double pad) {
          return generate_model_set(cps, lo, hi, pad);
        },
        py::arg("cps"), py::arg("lo"), py::arg("hi"), py::arg("pad") = 2.0);

  m.def("window_ft", &window_ft, py::arg("win_lo"), py::arg("win_hi"), py::arg("y"));
  m.def("window_overlap", &window_overlap, py::arg("win_lo"), py::arg("win_hi"),
        py::arg("shift"));

  m.def("bragg_spectrum", &bragg_spectrum, py::arg("cps"), py::arg("k_max"),
        py::arg("intensity_floor"));

  m.def("density_check",
        [](const CutProjectScheme& cps, const WeightedDiracComb& comb,
           const VanHoveFamily& fam, long n_max, double tol) {
          const auto res =
              density_check(cps, comb, fam, range_of(n_max, 0, 4, 10), tol);
          py::dict out;
          out["report"] = res.report;
          out["dens_closed"] = res.dens_closed;
          out["maximal"] = res.maximal;
          return out;
        },
        py::arg("cps"), py::arg("comb"), py::arg("family"), py::arg("n_max"),
        py::arg("tol") = 1e-2);

  m.def("mean_ap_delone",
        [](const WeightedDiracComb& mu, double u_radius, double epsilon,
           const VanHoveFamily& fam, double t_lo, double t_hi, double t_step,
           long n) {
          const auto rep =
              mean_ap_delone(mu, u_radius, epsilon, fam, t_lo, t_hi, t_step, n);
          py::dict out;
          out["t_values"] = rep.t_values;
          out["defect_density"] = rep.defect_density;
          out["almost_periods"] = rep.almost_periods;
          out["max_gap"] = rep.max_gap;
          out["relatively_dense"] = rep.relatively_dense;
          return out;
        },
        py::arg("comb"), py::arg("u_radius"), py::arg("epsilon"), py::arg("family"),
        py::arg("t_lo"), py::arg("t_hi"), py::arg("t_step"), py::arg("n"));

  m.def("weyl_classify",
        [](const WeightedDiracComb& mu, double tent_width,
           const std::vector<VanHoveFamily>& families,
           const std::vector<double>& shifts, const std::vector<double>& freqs,
           long n, double deficit_tol, double uniform_tol, double t_max) {
          ClassifyOptions opt;
          opt.deficit_tol = deficit_tol;
          opt.uniform_tol = uniform_tol;
          opt.t_max = t_max;
          const auto v = weyl_classify(mu, TentFunction::width(tent_width),
                                       families, ShiftGrid::explicit_shifts(shifts),
                                       to_points(freqs), n, opt);
          py::dict out;
          out["verdict"] = to_string(v.verdict);
          out["json"] = verdict_to_json(v);
          return out;
        },
        py::arg("comb"), py::arg("tent_width"), py::arg("families"),
        py::arg("shifts"), py::arg("freqs"), py::arg("n"),
        py::arg("deficit_tol") = 1e-2, py::arg("uniform_tol") = 5e-2,
        py::arg("t_max") = 30.0);

  m.def("run_verify",
        [](const std::string& name) {
          const auto suites = run_verify(name);
          bool pass = true;
          for (const auto& s : suites) pass = pass && s.pass();
          return py::make_tuple(pass, verify_table(suites));
        },
        py::arg("suite") = "all");
  m.def("verify_suite_names", &verify_suite_names);
}
