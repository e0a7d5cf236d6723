#include "diffract/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace diffract {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string comb_to_text(const WeightedDiracComb& comb) {
  std::ostringstream os;
  os << "dim=" << comb.dim() << "\n";
  os << "# region:";
  for (int i = 0; i < comb.dim(); ++i)
    os << " " << format_double(comb.region().lower[i]) << " "
       << format_double(comb.region().upper[i]);
  os << "\n";
  if (comb.discreteness_radius())
    os << "# discreteness_radius: " << format_double(*comb.discreteness_radius())
       << "\n";
  for (std::size_t i = 0; i < comb.size(); ++i) {
    for (int d = 0; d < comb.dim(); ++d) os << format_double(comb.point(i)[d]) << " ";
    os << format_double(comb.weight(i).real()) << " "
       << format_double(comb.weight(i).imag()) << "\n";
  }
  return os.str();
}

WeightedDiracComb comb_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int dim = -1;
  std::optional<BoxWindow> region;
  std::optional<double> radius;
  std::vector<Point> pts;
  std::vector<complexd> ws;
  long line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.rfind("# region:", 0) == 0) {
      std::istringstream ls(line.substr(9));
      std::vector<double> vals;
      double v;
      while (ls >> v) vals.push_back(v);
      if (vals.size() == 2)
        region = BoxWindow::interval(vals[0], vals[1]);
      else if (vals.size() == 4)
        region = BoxWindow::box2(vals[0], vals[1], vals[2], vals[3]);
      continue;
    }
    if (line.rfind("# discreteness_radius:", 0) == 0) {
      radius = std::stod(line.substr(22));
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("dim=", 0) == 0) {
      dim = std::stoi(line.substr(4));
      if (dim < 1 || dim > 2)
        throw std::runtime_error("comb file line " + std::to_string(line_no) +
                                 ": dim must be 1 or 2");
      continue;
    }
    if (dim < 0)
      throw std::runtime_error("comb file: atoms before dim= header (line " +
                               std::to_string(line_no) + ")");
    std::istringstream ls(line);
    std::vector<double> vals;
    double v;
    while (ls >> v) vals.push_back(v);
    if (static_cast<int>(vals.size()) != dim + 2)
      throw std::runtime_error("comb file line " + std::to_string(line_no) +
                               ": expected " + std::to_string(dim + 2) +
                               " numbers");
    Point p;
    for (int d = 0; d < dim; ++d) p[d] = vals[static_cast<std::size_t>(d)];
    pts.push_back(p);
    ws.push_back(complexd{vals[static_cast<std::size_t>(dim)],
                          vals[static_cast<std::size_t>(dim) + 1]});
  }
  if (dim < 0) throw std::runtime_error("comb file: missing dim= header");
  return WeightedDiracComb(dim, std::move(pts), std::move(ws), region, radius);
}

void write_comb(const std::string& path, const WeightedDiracComb& comb) {
  write_text_file(path, comb_to_text(comb));
}

WeightedDiracComb read_comb(const std::string& path) {
  return comb_from_text(read_text_file(path));
}

std::string report_to_csv(const ConvergenceReport& rep) {
  std::ostringstream os;
  os << "n,re_estimate,im_estimate\n";
  for (std::size_t i = 0; i < rep.n_values.size(); ++i)
    os << rep.n_values[i] << "," << format_double(rep.estimates[i].real()) << ","
       << format_double(rep.estimates[i].imag()) << "\n";
  return os.str();
}

namespace {
json complex_json(complexd z) { return json{{"re", z.real()}, {"im", z.imag()}}; }
}  // namespace

std::string report_to_json(const ConvergenceReport& rep) {
  json j;
  j["status"] = to_string(rep.status);
  j["tail_spread"] = rep.tail_spread;
  j["tail"] = rep.options.tail;
  j["tol"] = rep.options.tol;
  if (rep.converged()) j["limit"] = complex_json(rep.limit);
  if (rep.oscillating()) {
    j["clusters"] = json::array();
    for (const auto& c : rep.clusters) j["clusters"].push_back(complex_json(c));
  }
  j["note"] =
      "limsup realisation via tail clustering is a numerical heuristic";
  return j.dump(2) + "\n";
}

std::string autocorrelation_to_csv(const Autocorrelation& gamma) {
  std::ostringstream os;
  for (int d = 0; d < gamma.diffs.dim(); ++d) os << "z_" << (d + 1) << ",";
  os << "re_eta,im_eta\n";
  for (std::size_t i = 0; i < gamma.diffs.size(); ++i) {
    for (int d = 0; d < gamma.diffs.dim(); ++d)
      os << format_double(gamma.diffs.point(i)[d]) << ",";
    os << format_double(gamma.diffs.weight(i).real()) << ","
       << format_double(gamma.diffs.weight(i).imag()) << "\n";
  }
  return os.str();
}

std::string spectrum_to_csv(const SpectrumTable& table) {
  std::ostringstream os;
  os << "k,re_a,im_a,intensity,cpp_residual,status\n";
  for (const auto& row : table.rows) {
    os << format_double(row.freq[0]) << "," << format_double(row.a.real()) << ","
       << format_double(row.a.imag()) << "," << format_double(row.intensity)
       << "," << format_double(row.cpp_residual) << "," << row.status << "\n";
  }
  return os.str();
}

std::string spectrum_to_json(const SpectrumTable& table) {
  json j;
  j["pass"] = table.pass;
  j["tol"] = table.tol;
  j["rows"] = json::array();
  for (const auto& row : table.rows) {
    j["rows"].push_back(json{{"k", row.freq[0]},
                             {"a", complex_json(row.a)},
                             {"intensity", row.intensity},
                             {"cpp_residual", row.cpp_residual},
                             {"status", row.status}});
  }
  return j.dump(2) + "\n";
}

std::string verdict_to_json(const ApVerdict& verdict) {
  json j;
  j["verdict"] = to_string(verdict.verdict);
  j["parameters"] = verdict.parameters;
  j["any_undetermined"] = verdict.any_undetermined;
  j["mean"] = json{{"almost_periods_found", verdict.mean.almost_periods_found},
                   {"max_gap", verdict.mean.max_gap},
                   {"relatively_dense_empirically", verdict.mean.relatively_dense},
                   {"pass", verdict.mean.pass}};
  j["besicovitch"] = json{{"mean_sq", verdict.besicovitch.mean_sq},
                          {"sum_sq", verdict.besicovitch.sum_sq},
                          {"parseval_deficit", verdict.besicovitch.deficit},
                          {"deficit_tol", verdict.besicovitch.deficit_tol},
                          {"pass", verdict.besicovitch.pass}};
  j["weyl"] = json{{"besicovitch_every_family", verdict.weyl.besicovitch_every_family},
                   {"family_deficits", verdict.weyl.family_deficits},
                   {"uniform_fb", verdict.weyl.fb_uniform},
                   {"uniform_fb_spread", verdict.weyl.fb_spread},
                   {"uniform_mean_sq", verdict.weyl.mean_sq_uniform},
                   {"uniform_mean_sq_spread", verdict.weyl.mean_sq_spread},
                   {"pass", verdict.weyl.pass}};
  return j.dump(2) + "\n";
}

std::string verdict_summary(const ApVerdict& verdict) {
  char line[160];
  std::ostringstream os;
  os << "class verdict: " << to_string(verdict.verdict) << "\n";
  std::snprintf(line, sizeof(line),
                "  mean        %-4s  almost periods %zu, max gap %.4g, "
                "relatively dense %s\n",
                verdict.mean.pass ? "pass" : "fail",
                verdict.mean.almost_periods_found, verdict.mean.max_gap,
                verdict.mean.relatively_dense ? "yes" : "no");
  os << line;
  std::snprintf(line, sizeof(line),
                "  besicovitch %-4s  parseval deficit %.4g (tol %.3g)\n",
                verdict.besicovitch.pass ? "pass" : "fail",
                verdict.besicovitch.deficit, verdict.besicovitch.deficit_tol);
  os << line;
  std::snprintf(line, sizeof(line),
                "  weyl        %-4s  uniform FB %s (spread %.4g), uniform "
                "mean %s (spread %.4g)\n",
                verdict.weyl.pass ? "pass" : "fail",
                verdict.weyl.fb_uniform ? "yes" : "no", verdict.weyl.fb_spread,
                verdict.weyl.mean_sq_uniform ? "yes" : "no",
                verdict.weyl.mean_sq_spread);
  os << line;
  os << "  parameters: " << verdict.parameters << "\n";
  return os.str();
}

std::string mean_ap_to_csv(const MeanApReport& rep) {
  std::ostringstream os;
  os << "t,defect_density,almost_period\n";
  for (std::size_t i = 0; i < rep.t_values.size(); ++i) {
    os << format_double(rep.t_values[i]) << ","
       << format_double(rep.defect_density[i]) << ","
       << (rep.defect_density[i] < rep.epsilon ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string parseval_to_json(const ParsevalReport& rep) {
  json j;
  j["mean_sq"] = rep.mean_sq;
  j["sum_sq"] = rep.sum_sq;
  j["deficit"] = rep.deficit;
  j["freqs"] = json::array();
  for (std::size_t i = 0; i < rep.freqs.size(); ++i) {
    j["freqs"].push_back(json{{"k", rep.freqs[i][0]},
                              {"a", complex_json(rep.coefficients[i])}});
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace diffract
