// Command-line front end: fixture generation, experiment recipes from flat
// key-value configs, verification suites, and exports.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "diffract/classify.hpp"
#include "diffract/config.hpp"
#include "diffract/correlation.hpp"
#include "diffract/fixtures.hpp"
#include "diffract/io.hpp"
#include "diffract/model_sets.hpp"
#include "diffract/spectrum.hpp"
#include "diffract/verify.hpp"

namespace {

using namespace diffract;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRegionUnderflow = 2;
constexpr int kExitUndetermined = 3;

VanHoveFamily family_from_spec(const std::string& spec) {
  std::istringstream is(spec);
  std::string kind;
  is >> kind;
  double param = 0.0;
  if (kind == "symmetric") return VanHoveFamily::symmetric();
  if (kind == "quadratic") return VanHoveFamily::quadratic();
  if (kind == "alternating") return VanHoveFamily::alternating();
  if (kind == "skew") {
    if (!(is >> param)) throw std::runtime_error("family skew needs a ratio");
    return VanHoveFamily::skew(param);
  }
  if (kind == "shifted") {
    if (!(is >> param)) throw std::runtime_error("family shifted needs a rate");
    return VanHoveFamily::shifted(param);
  }
  throw std::runtime_error("unknown family: " + spec);
}

WeightedDiracComb load_input(const ExperimentConfig& cfg) {
  const std::string input = cfg.get("input");
  if (input.rfind("fixture:", 0) == 0) {
    const std::string name = input.substr(8);
    const auto region = cfg.get_doubles("region");
    if (region.size() != 2)
      throw std::runtime_error("region must be two numbers: lo hi");
    std::vector<double> params;
    if (cfg.has("a")) params.push_back(cfg.get_double("a"));
    if (cfg.has("spacing")) params.push_back(cfg.get_double("spacing"));
    return make_fixture(name, params, region[0], region[1]);
  }
  return read_comb(input);
}

NRange n_range_from(const ExperimentConfig& cfg) {
  const long n_max = cfg.get_long("n_max");
  const long n_min = cfg.get_long_or("n_min", std::max<long>(2, n_max / 8));
  const int coarse = static_cast<int>(cfg.get_long_or("n_coarse", 4));
  const int tail = static_cast<int>(cfg.get_long_or("n_tail", 10));
  return NRange::geometric_with_tail(n_min, n_max, coarse, tail);
}

ConvergenceOptions conv_from(const ExperimentConfig& cfg) {
  ConvergenceOptions conv;
  conv.tol = cfg.get_double_or("conv_tol", conv.tol);
  conv.tail = static_cast<int>(cfg.get_long_or("conv_tail", conv.tail));
  return conv;
}

std::vector<Point> freqs_from(const ExperimentConfig& cfg) {
  std::vector<Point> out;
  for (double k : cfg.get_doubles("freqs")) out.push_back(Point{k});
  return out;
}

ShiftGrid shifts_from(const ExperimentConfig& cfg, long n_max) {
  if (cfg.has("shifts")) return ShiftGrid::explicit_shifts(cfg.get_doubles("shifts"));
  // randomised grid: seed mandatory
  const unsigned long seed = cfg.seed();
  return ShiftGrid::standard(cfg.get_double_or("period_hint", 1.0),
                             cfg.get_double_or("shift_span", static_cast<double>(n_max)),
                             static_cast<int>(cfg.get_long_or("shift_equispaced", 64)),
                             static_cast<int>(cfg.get_long_or("shift_random", 64)),
                             seed);
}

void maybe_write(const ExperimentConfig& cfg, const std::string& key,
                 const std::string& content) {
  if (cfg.has(key)) write_text_file(cfg.get(key), content);
}

int finish_report(const ExperimentConfig& cfg, const ConvergenceReport& rep) {
  maybe_write(cfg, "out_csv", report_to_csv(rep));
  maybe_write(cfg, "out_json", report_to_json(rep));
  std::cout << report_to_json(rep);
  if (cfg.get_long_or("require_verdict", 0) != 0 &&
      rep.status == ConvergenceStatus::undetermined)
    return kExitUndetermined;
  return kExitOk;
}

int run_config(const std::string& path) {
  const ExperimentConfig cfg = ExperimentConfig::load(path);
  const std::string op = cfg.get("op");
  const auto conv = conv_from(cfg);

  if (op == "mean") {
    auto rep = mean_along(load_input(cfg), family_from_spec(cfg.get("family")),
                          n_range_from(cfg), conv);
    return finish_report(cfg, rep);
  }
  if (op == "fourier_bohr") {
    auto rep = fourier_bohr(load_input(cfg), Point{cfg.get_double("k")},
                            family_from_spec(cfg.get("family")), n_range_from(cfg),
                            Point{cfg.get_double_or("shift", 0.0)}, conv);
    return finish_report(cfg, rep);
  }
  if (op == "pair_correlation") {
    auto rep = pair_correlation(load_input(cfg), Point{cfg.get_double("z")},
                                family_from_spec(cfg.get("family")),
                                n_range_from(cfg), conv);
    return finish_report(cfg, rep);
  }
  if (op == "autocorrelation") {
    AutocorrOptions aopt;
    aopt.z_max = cfg.get_double_or("z_max", aopt.z_max);
    aopt.cluster_tol = cfg.get_double_or("cluster_tol", aopt.cluster_tol);
    auto gamma = autocorrelation(load_input(cfg), family_from_spec(cfg.get("family")),
                                 cfg.get_long("n_max"), aopt);
    const std::string csv = autocorrelation_to_csv(gamma);
    maybe_write(cfg, "out_csv", csv);
    std::cout << "atoms " << gamma.diffs.size() << ", boundary loss bound "
              << format_double(gamma.boundary_loss_bound) << "\n";
    return kExitOk;
  }
  if (op == "besicovitch" || op == "weyl") {
    auto mu = load_input(cfg);
    SmoothedComb f(mu, TentFunction::width(cfg.get_double_or("tent_width", 0.5)));
    const FnD fn = [&](const Point& t) { return f(t); };
    const double p = cfg.get_double_or("p", 2.0);
    const auto fam = family_from_spec(cfg.get("family"));
    ConvergenceReport rep;
    if (op == "besicovitch") {
      rep = besicovitch_seminorm(fn, 1, p, fam, n_range_from(cfg), {}, conv);
    } else {
      rep = weyl_seminorm(fn, 1, p, fam, n_range_from(cfg),
                          shifts_from(cfg, cfg.get_long("n_max")), {}, conv);
    }
    return finish_report(cfg, rep);
  }
  if (op == "cpp") {
    CppOptions opt;
    opt.z_max = cfg.get_double_or("z_max", opt.z_max);
    opt.m_max = cfg.get_long_or("m_max", opt.m_max);
    auto table = cpp_check(load_input(cfg), family_from_spec(cfg.get("family")),
                           freqs_from(cfg), cfg.get_long("n_max"),
                           cfg.get_double_or("cpp_tol", 1e-2), opt);
    maybe_write(cfg, "out_csv", spectrum_to_csv(table));
    maybe_write(cfg, "out_json", spectrum_to_json(table));
    std::cout << spectrum_to_json(table);
    return kExitOk;
  }
  if (op == "parseval") {
    auto mu = load_input(cfg);
    SmoothedComb f(mu, TentFunction::width(cfg.get_double_or("tent_width", 0.5)));
    const FnD fn = [&](const Point& t) { return f(t); };
    auto rep = parseval_check(fn, 1, family_from_spec(cfg.get("family")),
                              freqs_from(cfg), cfg.get_long("n_max"));
    maybe_write(cfg, "out_json", parseval_to_json(rep));
    std::cout << parseval_to_json(rep);
    return kExitOk;
  }
  if (op == "peak_scan") {
    auto peaks = peak_scan(load_input(cfg), family_from_spec(cfg.get("family")),
                           cfg.get_double("k_lo"), cfg.get_double("k_hi"),
                           cfg.get_double_or("k_step", 2.5e-4),
                           cfg.get_long("n_max"),
                           cfg.get_double_or("threshold", 0.3));
    std::ostringstream os;
    os << "k\n";
    for (double p : peaks) os << format_double(p) << "\n";
    maybe_write(cfg, "out_csv", os.str());
    std::cout << os.str();
    return kExitOk;
  }
  if (op == "density" || op == "bragg") {
    std::array<std::array<double, 2>, 2> basis{};
    if (cfg.get_or("cps", "fibonacci") == "fibonacci") {
      basis = CutProjectScheme::fibonacci().basis;
    } else {
      const auto rows = cfg.get_doubles("basis");
      if (rows.size() != 4) throw std::runtime_error("basis needs 4 numbers");
      basis = {{{rows[0], rows[1]}, {rows[2], rows[3]}}};
    }
    const auto w = cfg.get_doubles_or("window", {CutProjectScheme::fibonacci().win_lo,
                                                 CutProjectScheme::fibonacci().win_hi});
    const CutProjectScheme cps(basis, w[0], w[1]);
    if (op == "bragg") {
      auto table = bragg_spectrum(cps, cfg.get_double_or("k_max", 3.0),
                                  cfg.get_double_or("intensity_floor", 1e-3));
      maybe_write(cfg, "out_csv", spectrum_to_csv(table));
      std::cout << spectrum_to_csv(table);
      return kExitOk;
    }
    const auto region = cfg.get_doubles("region");
    auto comb = generate_model_set(cps, region[0], region[1]);
    auto res = density_check(cps, comb, family_from_spec(cfg.get("family")),
                             n_range_from(cfg), cfg.get_double_or("tol", 1e-2));
    maybe_write(cfg, "out_csv", report_to_csv(res.report));
    std::cout << "dens_closed " << format_double(res.dens_closed) << ", maximal "
              << (res.maximal ? "true" : "false") << "\n"
              << report_to_json(res.report);
    return kExitOk;
  }
  if (op == "mean_ap") {
    auto rep = mean_ap_delone(
        load_input(cfg), cfg.get_double_or("u_radius", 0.1),
        cfg.get_double_or("epsilon", 0.05), family_from_spec(cfg.get("family")),
        cfg.get_double_or("t_lo", 0.0), cfg.get_double("t_hi"),
        cfg.get_double_or("t_step", 0.25), cfg.get_long("n_max"));
    maybe_write(cfg, "out_csv", mean_ap_to_csv(rep));
    std::cout << "almost_periods " << rep.almost_periods.size() << ", max_gap "
              << format_double(rep.max_gap) << ", relatively_dense "
              << (rep.relatively_dense ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (op == "classify") {
    auto mu = load_input(cfg);
    ClassifyOptions opt;
    opt.deficit_tol = cfg.get_double_or("deficit_tol", opt.deficit_tol);
    opt.uniform_tol = cfg.get_double_or("uniform_tol", opt.uniform_tol);
    opt.t_max = cfg.get_double_or("t_max", opt.t_max);
    std::vector<VanHoveFamily> families;
    for (const auto& [key, value] : cfg.entries()) {
      if (key == "family" || key.rfind("family_", 0) == 0)
        families.push_back(family_from_spec(value));
    }
    if (families.empty()) families.push_back(VanHoveFamily::symmetric());
    auto v = weyl_classify(mu,
                           TentFunction::width(cfg.get_double_or("tent_width", 0.5)),
                           families, shifts_from(cfg, cfg.get_long("n_max")),
                           freqs_from(cfg), cfg.get_long("n_max"), opt);
    maybe_write(cfg, "out_json", verdict_to_json(v));
    std::cout << verdict_summary(v) << verdict_to_json(v);
    if (v.verdict == ApClass::inconclusive &&
        cfg.get_long_or("require_verdict", 0) != 0)
      return kExitUndetermined;
    return kExitOk;
  }
  throw std::runtime_error("unknown op: " + op);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diffraction-theoretic numerics for point measures"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write a builtin fixture comb file");
  std::string fixture, gen_out = "-";
  std::vector<double> gen_region{-1000.0, 1000.0};
  double gen_a = 0.41421356237309503;
  double gen_spacing = 1.0;
  gen->add_option("fixture", fixture,
                  "one of: lattice, a_defect, n_minus_2n, blocks, fibonacci")
      ->required();
  gen->add_option("--region", gen_region, "generation region lo hi")->expected(2);
  gen->add_option("--a", gen_a, "phase slip for a_defect");
  gen->add_option("--spacing", gen_spacing, "lattice spacing");
  gen->add_option("-o,--out", gen_out, "output path ('-' for stdout)");

  auto* run = app.add_subcommand("run", "run an experiment recipe");
  std::string config_path;
  run->add_option("config", config_path, "flat key-value recipe file")->required();

  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "suite name or 'all'");
  bool list_suites = false;
  verify->add_flag("--list", list_suites, "list suite names");

  auto* exp = app.add_subcommand("export", "re-export a comb file as CSV");
  std::string exp_comb, exp_csv;
  exp->add_option("--comb", exp_comb, "input comb file")->required();
  exp->add_option("--csv", exp_csv, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      std::vector<double> params;
      if (fixture == "a_defect" || fixture == "a-defect") params.push_back(gen_a);
      if (fixture == "lattice") params.push_back(gen_spacing);
      auto comb = diffract::make_fixture(fixture, params, gen_region[0], gen_region[1]);
      const std::string text = diffract::comb_to_text(comb);
      if (gen_out == "-")
        std::cout << text;
      else
        diffract::write_text_file(gen_out, text);
      return kExitOk;
    }
    if (*run) return run_config(config_path);
    if (*verify) {
      if (list_suites) {
        for (const auto& name : diffract::verify_suite_names())
          std::cout << name << "\n";
        return kExitOk;
      }
      const auto suites = diffract::run_verify(suite);
      std::cout << diffract::verify_table(suites);
      for (const auto& s : suites)
        if (!s.pass()) return kExitError;
      return kExitOk;
    }
    if (*exp) {
      auto comb = diffract::read_comb(exp_comb);
      std::ostringstream os;
      for (int d = 0; d < comb.dim(); ++d) os << "x_" << (d + 1) << ",";
      os << "re_w,im_w\n";
      for (std::size_t i = 0; i < comb.size(); ++i) {
        for (int d = 0; d < comb.dim(); ++d)
          os << diffract::format_double(comb.point(i)[d]) << ",";
        os << diffract::format_double(comb.weight(i).real()) << ","
           << diffract::format_double(comb.weight(i).imag()) << "\n";
      }
      diffract::write_text_file(exp_csv, os.str());
      return kExitOk;
    }
  } catch (const diffract::RegionUnderflow& e) {
    std::cerr << "region underflow: " << e.what() << "\n";
    return kExitRegionUnderflow;
  } catch (const diffract::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
