#pragma once

#include <string>
#include <vector>

#include "diffract/classify.hpp"
#include "diffract/comb.hpp"
#include "diffract/correlation.hpp"
#include "diffract/report.hpp"
#include "diffract/spectrum.hpp"

namespace diffract {

/// Fixed "%.17g" double formatting so outputs are byte-stable across runs.
std::string format_double(double v);

/// Comb text format: a `dim=<d>` header, one atom per line
/// `x_1 .. x_d re(w) im(w)`, `#` comments. The generation region and
/// discreteness radius ride along in structured comments so a round trip
/// restores them.
std::string comb_to_text(const WeightedDiracComb& comb);
WeightedDiracComb comb_from_text(const std::string& text);
void write_comb(const std::string& path, const WeightedDiracComb& comb);
WeightedDiracComb read_comb(const std::string& path);

/// Report export: CSV columns n, re(estimate), im(estimate); JSON summary
/// {status, limit, clusters, tail_spread}.
std::string report_to_csv(const ConvergenceReport& rep);
std::string report_to_json(const ConvergenceReport& rep);

/// Autocorrelation export: CSV z_1 .. z_d re(eta) im(eta).
std::string autocorrelation_to_csv(const Autocorrelation& gamma);

/// Spectrum export: CSV k re(a) im(a) intensity cpp_residual status, plus a
/// JSON verdict summary.
std::string spectrum_to_csv(const SpectrumTable& table);
std::string spectrum_to_json(const SpectrumTable& table);

std::string verdict_to_json(const ApVerdict& verdict);
/// Human-readable evidence table for a classification verdict.
std::string verdict_summary(const ApVerdict& verdict);
std::string mean_ap_to_csv(const MeanApReport& rep);
std::string parseval_to_json(const ParsevalReport& rep);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace diffract
