#include "diffract/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diffract/summation.hpp"

namespace diffract {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double dot(const Point& k, const Point& x, int dim) {
  double v = 0.0;
  for (int i = 0; i < dim; ++i) v += k[i] * x[i];
  return v;
}
}  // namespace

complexd fourier_bohr_window(const WeightedDiracComb& mu, const Point& k,
                             const BoxWindow& A) {
  const auto idx = mu.indices_in(A);
  const complexd total = pairwise_sum(idx.size(), [&](std::size_t i) {
    const std::size_t a = idx[i];
    return mu.weight(a) * std::polar(1.0, -kTwoPi * dot(k, mu.point(a), mu.dim()));
  });
  return total / A.volume();
}

ConvergenceReport fourier_bohr(const WeightedDiracComb& mu, const Point& k,
                               const VanHoveFamily& fam, const NRange& ns,
                               const Point& shift, const ConvergenceOptions& conv) {
  mu.ensure_covers(fam.window(ns.max_n()).shifted(shift), "fourier_bohr");
  std::vector<complexd> est;
  est.reserve(ns.values.size());
  for (long n : ns.values)
    est.push_back(fourier_bohr_window(mu, k, fam.window(n).shifted(shift)));
  return detect_limit(ns.values, std::move(est), conv);
}

UniformFBReport fourier_bohr_uniform(const WeightedDiracComb& mu, const Point& k,
                                     const VanHoveFamily& fam, const NRange& ns,
                                     const ShiftGrid& shifts, double tol,
                                     const ConvergenceOptions& conv) {
  if (shifts.shifts.empty())
    throw std::invalid_argument("fourier_bohr_uniform: empty shift grid");
  UniformFBReport rep;
  rep.shifts = shifts.shifts;
  bool all_converged = true;
  std::vector<complexd> limits;
  for (const Point& s : shifts.shifts) {
    rep.reports.push_back(fourier_bohr(mu, k, fam, ns, s, conv));
    if (!rep.reports.back().converged()) all_converged = false;
    limits.push_back(rep.reports.back().value());
  }
  for (std::size_t i = 0; i < limits.size(); ++i)
    for (std::size_t j = i + 1; j < limits.size(); ++j)
      rep.spread = std::max(rep.spread, std::abs(limits[i] - limits[j]));
  rep.limit = pairwise_sum(limits.size(), [&](std::size_t i) { return limits[i]; }) /
              static_cast<double>(limits.size());
  rep.uniform = all_converged && rep.spread < tol;
  return rep;
}

ConvergenceReport diffraction_intensity(const Autocorrelation& gamma,
                                        const Point& k,
                                        const VanHoveFamily& fam_b,
                                        const NRange& ms,
                                        const ConvergenceOptions& conv) {
  const BoxWindow largest = fam_b.window(ms.max_n());
  for (int i = 0; i < gamma.diffs.dim(); ++i) {
    if (largest.lower[i] < -gamma.z_max - kMatchTol ||
        largest.upper[i] > gamma.z_max + kMatchTol)
      throw SupportUnderflow(
          "diffraction_intensity: window exceeds the generated z_max of the "
          "autocorrelation");
  }
  std::vector<complexd> est;
  est.reserve(ms.values.size());
  for (long m : ms.values)
    est.push_back(fourier_bohr_window(gamma.diffs, k, fam_b.window(m)));
  return detect_limit(ms.values, std::move(est), conv);
}

double intensity_value(const ConvergenceReport& rep, double tol, bool* clamped) {
  const double raw = rep.value().real();
  if (clamped) *clamped = false;
  if (raw < 0.0 && raw > -tol) {
    if (clamped) *clamped = true;
    return 0.0;
  }
  return raw;
}

SpectrumTable cpp_check(const WeightedDiracComb& mu, const VanHoveFamily& fam,
                        const std::vector<Point>& freqs, long n, double tol,
                        const CppOptions& opt) {
  const double auto_z = std::clamp(static_cast<double>(n) / 50.0, 10.0, 100.0);
  AutocorrOptions aopt;
  aopt.cluster_tol = opt.cluster_tol;
  aopt.z_max = opt.z_max > 0.0 ? opt.z_max : auto_z;
  const Autocorrelation gamma = autocorrelation(mu, fam, n, aopt);
  const long m_max = std::min<long>(
      opt.m_max > 0 ? opt.m_max : static_cast<long>(aopt.z_max),
      static_cast<long>(aopt.z_max));
  const NRange ms = NRange::geometric_with_tail(std::max<long>(2, m_max / 8), m_max,
                                                4, opt.m_tail);
  const NRange ns = NRange::geometric_with_tail(std::max<long>(2, n / 8), n, 4, 10);
  const VanHoveFamily fam_b = VanHoveFamily::symmetric(mu.dim());

  SpectrumTable table;
  table.tol = tol;
  table.pass = true;
  for (const Point& k : freqs) {
    SpectrumRow row;
    row.freq = k;
    const ConvergenceReport fb = fourier_bohr(mu, k, fam, ns);
    row.a = fb.value();
    const ConvergenceReport ir = diffraction_intensity(gamma, k, fam_b, ms, opt.conv);
    row.intensity = intensity_value(ir, tol);
    row.cpp_residual = std::abs(row.intensity - std::norm(row.a));
    const bool ok = row.cpp_residual < tol;
    row.status = std::string(ok ? "pass" : "fail");
    if (!fb.converged() || !ir.converged()) row.status += "/undetermined";
    table.pass = table.pass && ok;
    table.rows.push_back(row);
  }
  return table;
}

ParsevalReport parseval_check(const FnD& f, int dim, const VanHoveFamily& fam,
                              const std::vector<Point>& freq_set, long n,
                              const QuadratureOptions& quad) {
  // Duplicate frequencies would double-count spectral mass; drop them.
  std::vector<Point> freqs;
  for (const Point& k : freq_set) {
    bool dup = false;
    for (const Point& seen : freqs)
      if (points_match(k, seen, dim)) dup = true;
    if (!dup) freqs.push_back(k);
  }
  const auto wi = window_integrals(f, dim, fam.window(n), freqs, 2.0, quad);
  ParsevalReport rep;
  rep.freqs = freqs;
  rep.coefficients = wi.fb;
  rep.mean_sq = wi.mean_abs_p;
  rep.sum_sq = pairwise_sum(freqs.size(),
                            [&](std::size_t i) { return std::norm(wi.fb[i]); });
  rep.deficit = rep.mean_sq - rep.sum_sq;
  return rep;
}

std::vector<double> peak_scan(const WeightedDiracComb& mu,
                              const VanHoveFamily& fam, double k_lo, double k_hi,
                              double k_step, long n, double threshold) {
  if (!(k_step > 0.0) || !(k_hi >= k_lo))
    throw std::invalid_argument("peak_scan: bad grid");
  const BoxWindow A = fam.window(n);
  mu.ensure_covers(A, "peak_scan");
  const auto idx = mu.indices_in(A);
  const double inv_vol = 1.0 / A.volume();
  const auto amplitude = [&](double k) {
    const complexd s = pairwise_sum(idx.size(), [&](std::size_t i) {
      const std::size_t a = idx[i];
      return mu.weight(a) * std::polar(1.0, -kTwoPi * k * mu.point(a)[0]);
    });
    return std::abs(s) * inv_vol;
  };

  const std::size_t count =
      static_cast<std::size_t>(std::floor((k_hi - k_lo) / k_step)) + 1;
  std::vector<double> amp(count);
  for (std::size_t i = 0; i < count; ++i) amp[i] = amplitude(k_lo + k_step * i);

  std::vector<double> peaks;
  for (std::size_t i = 0; i < count; ++i) {
    const bool left_ok = i == 0 || amp[i] >= amp[i - 1];
    const bool right_ok = i + 1 == count || amp[i] > amp[i + 1];
    if (!(left_ok && right_ok) || amp[i] < threshold) continue;
    // Ternary search on the smooth modulus within one grid cell each side.
    double lo = k_lo + k_step * (i == 0 ? 0 : i - 1);
    double hi = k_lo + k_step * std::min(count - 1, i + 1);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (amplitude(m1) < amplitude(m2))
        lo = m1;
      else
        hi = m2;
    }
    peaks.push_back(0.5 * (lo + hi));
  }
  return peaks;
}

}  // namespace diffract
