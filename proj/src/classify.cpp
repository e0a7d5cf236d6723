#include "diffract/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace diffract {

std::string to_string(ApClass c) {
  switch (c) {
    case ApClass::weyl: return "weyl";
    case ApClass::besicovitch: return "besicovitch";
    case ApClass::mean: return "mean";
    case ApClass::none: return "none";
    case ApClass::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double translation_defect_density(const WeightedDiracComb& lambda, const Point& t,
                                  double u_radius, const BoxWindow& A) {
  // #(Lambda \ (t + Lambda + U)) + #((t + Lambda) \ (Lambda + U)) over A.
  std::size_t defects = 0;
  lambda.for_each_in(A, [&](std::size_t i) {
    // x in Lambda is matched if some y in Lambda has |x - t - y| <= u_radius.
    if (lambda.find(sub(lambda.point(i), t), u_radius) == WeightedDiracComb::npos)
      ++defects;
  });
  // Second leg: y = x' + t for atoms x'; y must lie in A.
  const BoxWindow shifted_back = A.shifted(negate(t));
  lambda.for_each_in(shifted_back, [&](std::size_t i) {
    const Point y = add(lambda.point(i), t);
    if (lambda.find(y, u_radius) == WeightedDiracComb::npos) ++defects;
  });
  return static_cast<double>(defects) / A.volume();
}

namespace {

MeanApReport scan_defects(const WeightedDiracComb& lambda, double u_radius,
                          double epsilon, const VanHoveFamily& fam,
                          const std::vector<double>& t_grid, long n,
                          double gap_bound_factor) {
  if (!lambda.unit_weights())
    throw std::invalid_argument("mean a.p. scan: expects a unit-weight point set");
  if (lambda.dim() != 1)
    throw std::invalid_argument("mean a.p. scan: d = 1 only");
  const BoxWindow A = fam.window(n);
  double t_abs = 0.0;
  for (double t : t_grid) t_abs = std::max(t_abs, std::abs(t));
  lambda.ensure_covers(A.padded(t_abs + u_radius), "mean a.p. scan");

  MeanApReport rep;
  rep.epsilon = epsilon;
  rep.u_radius = u_radius;
  rep.n = n;
  for (double t : t_grid) {
    rep.t_values.push_back(t);
    rep.defect_density.push_back(
        translation_defect_density(lambda, Point{t}, u_radius, A));
    if (rep.defect_density.back() < epsilon) rep.almost_periods.push_back(t);
  }
  if (rep.almost_periods.size() >= 2) {
    double max_gap = 0.0, min_gap = INFINITY;
    for (std::size_t i = 0; i + 1 < rep.almost_periods.size(); ++i) {
      const double g = rep.almost_periods[i + 1] - rep.almost_periods[i];
      max_gap = std::max(max_gap, g);
      min_gap = std::min(min_gap, g);
    }
    rep.max_gap = max_gap;
    rep.min_gap = min_gap;
    rep.gap_bound = gap_bound_factor * min_gap;
    rep.relatively_dense = max_gap <= rep.gap_bound;
  }
  return rep;
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw std::invalid_argument("bad scan grid");
  std::vector<double> g;
  for (double t = lo; t <= hi + 1e-12; t += step) g.push_back(t);
  return g;
}

}  // namespace

MeanApReport mean_ap_delone(const WeightedDiracComb& lambda, double u_radius,
                            double epsilon, const VanHoveFamily& fam, double t_lo,
                            double t_hi, double t_step, long n,
                            double gap_bound_factor) {
  return scan_defects(lambda, u_radius, epsilon, fam,
                      make_grid(t_lo, t_hi, t_step), n, gap_bound_factor);
}

MeanApReport mean_ap_delone(const WeightedDiracComb& lambda, double u_radius,
                            double epsilon, const VanHoveFamily& fam,
                            const std::vector<double>& t_grid, long n,
                            double gap_bound_factor) {
  return scan_defects(lambda, u_radius, epsilon, fam, t_grid, n,
                      gap_bound_factor);
}

std::vector<double> return_vectors(const WeightedDiracComb& comb, double t_max,
                                   double merge_tol) {
  std::vector<double> diffs{0.0};
  for (std::size_t i = 0; i < comb.size(); ++i) {
    for (std::size_t j = i + 1; j < comb.size(); ++j) {
      const double d = comb.point(j)[0] - comb.point(i)[0];
      if (d > t_max) break;
      diffs.push_back(d);
    }
  }
  std::sort(diffs.begin(), diffs.end());
  std::vector<double> out;
  for (double d : diffs) {
    if (out.empty() || d - out.back() > merge_tol) out.push_back(d);
  }
  return out;
}

MeanApReport mean_ap_meyer(const WeightedDiracComb& lambda, double epsilon,
                           const VanHoveFamily& fam,
                           const std::vector<double>& t_grid, long n,
                           double gap_bound_factor, double match_tol) {
  return scan_defects(lambda, match_tol, epsilon, fam, t_grid, n,
                      gap_bound_factor);
}

MeanApReport mean_ap_meyer(const WeightedDiracComb& lambda, double epsilon,
                           const VanHoveFamily& fam, double t_lo, double t_hi,
                           double t_step, long n, double gap_bound_factor,
                           double match_tol) {
  return mean_ap_meyer(lambda, epsilon, fam, make_grid(t_lo, t_hi, t_step), n,
                       gap_bound_factor, match_tol);
}

BesicovitchEvidence besicovitch_classify(const WeightedDiracComb& mu,
                                         const TentFunction& phi,
                                         const VanHoveFamily& fam,
                                         const std::vector<Point>& freqs, long n,
                                         double deficit_tol,
                                         const QuadratureOptions& quad) {
  const SmoothedComb f(mu, phi);
  const FnD fn = [&f](const Point& t) { return f(t); };
  const ParsevalReport pr = parseval_check(fn, mu.dim(), fam, freqs, n, quad);
  BesicovitchEvidence ev;
  ev.mean_sq = pr.mean_sq;
  ev.sum_sq = pr.sum_sq;
  ev.deficit = pr.deficit;
  ev.deficit_tol = deficit_tol;
  ev.freqs = pr.freqs;
  ev.pass = pr.deficit < deficit_tol;
  return ev;
}

ApVerdict weyl_classify(const WeightedDiracComb& mu, const TentFunction& phi,
                        const std::vector<VanHoveFamily>& families,
                        const ShiftGrid& shifts, const std::vector<Point>& freqs,
                        long n, const ClassifyOptions& opt) {
  if (families.empty()) throw std::invalid_argument("weyl_classify: no families");
  ApVerdict verdict;
  {
    std::ostringstream os;
    os << "n=" << n << " families=" << families.size()
       << " shifts=" << shifts.shifts.size() << " freqs=" << freqs.size()
       << " deficit_tol=" << opt.deficit_tol << " uniform_tol=" << opt.uniform_tol;
    verdict.parameters = os.str();
  }

  // Mean level: translation defects of the comb itself along the primary
  // family, scanned over the comb's return vectors (the only candidate almost
  // periods of a point set). A zero-density comb has vanishing defect density
  // for every t and passes trivially, consistent with the theory.
  const MeanApReport map_rep =
      mean_ap_delone(mu, opt.mean_ap_u_radius, opt.mean_ap_epsilon, families[0],
                     return_vectors(mu, opt.t_max), n);
  verdict.mean.almost_periods_found = map_rep.almost_periods.size();
  verdict.mean.max_gap = map_rep.max_gap;
  verdict.mean.relatively_dense = map_rep.relatively_dense;
  verdict.mean.pass = map_rep.relatively_dense;

  // Besicovitch level, for every supplied family.
  bool bes_all = true;
  for (const auto& fam : families) {
    const BesicovitchEvidence ev =
        besicovitch_classify(mu, phi, fam, freqs, n, opt.deficit_tol, opt.quad);
    verdict.weyl.family_deficits.push_back(ev.deficit);
    if (&fam == &families.front()) verdict.besicovitch = ev;
    bes_all = bes_all && ev.pass;
  }
  verdict.weyl.besicovitch_every_family = bes_all;

  // Weyl level: uniform Fourier-Bohr coefficients on the candidate set and a
  // uniform mean of |mu * phi|^2 over the shift grid.
  const NRange ns =
      opt.uniform_ns.value_or(
          NRange::geometric_with_tail(std::max<long>(2, n / 8), n, 4, 10));
  bool fb_uniform = true;
  double fb_spread = 0.0;
  bool undetermined = false;
  for (const Point& k : freqs) {
    const UniformFBReport ur = fourier_bohr_uniform(mu, k, families[0], ns, shifts,
                                                    opt.uniform_tol, opt.uniform_conv);
    fb_uniform = fb_uniform && ur.uniform;
    fb_spread = std::max(fb_spread, ur.spread);
    for (const auto& r : ur.reports)
      if (r.status == ConvergenceStatus::undetermined) undetermined = true;
  }
  verdict.weyl.fb_uniform = fb_uniform;
  verdict.weyl.fb_spread = fb_spread;

  {
    const SmoothedComb f(mu, phi);
    const FnD sq = [&f](const Point& t) { return std::norm(f(t)); };
    const AmenabilityReport am =
        amenability_check(sq, mu.dim(), {families[0]}, shifts, ns, opt.uniform_tol,
                          opt.quad, opt.uniform_conv);
    verdict.weyl.mean_sq_uniform = am.amenable;
    verdict.weyl.mean_sq_spread = am.families.front().shift_spread;
    for (const auto& fr : am.families)
      for (const auto& r : fr.per_shift)
        if (r.status == ConvergenceStatus::undetermined) undetermined = true;
  }
  verdict.weyl.pass = verdict.weyl.besicovitch_every_family &&
                      verdict.weyl.fb_uniform && verdict.weyl.mean_sq_uniform;
  verdict.any_undetermined = undetermined;

  // The hierarchy is enforced here: each class requires all weaker ones.
  if (verdict.weyl.pass && verdict.besicovitch.pass && verdict.mean.pass)
    verdict.verdict = ApClass::weyl;
  else if (verdict.besicovitch.pass && verdict.mean.pass)
    verdict.verdict = ApClass::besicovitch;
  else if (verdict.mean.pass)
    verdict.verdict = ApClass::mean;
  else
    verdict.verdict = ApClass::none;
  if (undetermined) verdict.verdict = ApClass::inconclusive;
  return verdict;
}

}  // namespace diffract
