#include "diffract/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "diffract/summation.hpp"

namespace diffract {

complexd Autocorrelation::eta(const Point& z, double tol) const {
  const std::size_t i = diffs.find(z, tol);
  return i == WeightedDiracComb::npos ? complexd{} : diffs.weight(i);
}

double Autocorrelation::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    const complexd mirror = eta(negate(diffs.point(i)), cluster_tol);
    worst = std::max(worst, std::abs(mirror - std::conj(diffs.weight(i))));
  }
  return worst;
}

namespace {

struct Diff {
  Point z;
  complexd w;
};

// Merge sorted differences: a new cluster starts when the gap to the previous
// element exceeds cluster_tol (exact constructions produce groups far tighter
// than the tolerance, separated by far more).
std::pair<std::vector<Point>, std::vector<complexd>> merge_diffs_1d(
    std::vector<Diff>& diffs, double cluster_tol) {
  std::sort(diffs.begin(), diffs.end(),
            [](const Diff& a, const Diff& b) { return a.z[0] < b.z[0]; });
  std::vector<Point> pts;
  std::vector<complexd> ws;
  std::size_t i = 0;
  while (i < diffs.size()) {
    std::size_t j = i + 1;
    while (j < diffs.size() && diffs[j].z[0] - diffs[j - 1].z[0] <= cluster_tol) ++j;
    const std::size_t count = j - i;
    const double center =
        pairwise_sum(count, [&](std::size_t k) { return diffs[i + k].z[0]; }) /
        static_cast<double>(count);
    const complexd w =
        pairwise_sum(count, [&](std::size_t k) { return diffs[i + k].w; });
    pts.push_back(Point{center});
    ws.push_back(w);
    i = j;
  }
  return {std::move(pts), std::move(ws)};
}

std::pair<std::vector<Point>, std::vector<complexd>> merge_diffs_2d(
    std::vector<Diff>& diffs, double cluster_tol) {
  // Grid hashing on cells of size cluster_tol; groups split across adjacent
  // cells are unified through the running representative map.
  std::map<std::pair<long long, long long>, std::size_t> cell_to_group;
  std::vector<Point> sum_pos;
  std::vector<complexd> sum_w;
  std::vector<std::size_t> count;
  const double cell = std::max(cluster_tol, 1e-300);
  for (const auto& d : diffs) {
    const long long cx = static_cast<long long>(std::floor(d.z[0] / cell));
    const long long cy = static_cast<long long>(std::floor(d.z[1] / cell));
    std::size_t group = static_cast<std::size_t>(-1);
    for (long long ox = -1; ox <= 1 && group == static_cast<std::size_t>(-1); ++ox)
      for (long long oy = -1; oy <= 1; ++oy) {
        auto it = cell_to_group.find({cx + ox, cy + oy});
        if (it == cell_to_group.end()) continue;
        const std::size_t g = it->second;
        const Point rep{sum_pos[g][0] / count[g], sum_pos[g][1] / count[g]};
        if (max_norm_dist(rep, d.z, 2) <= cluster_tol) {
          group = g;
          break;
        }
      }
    if (group == static_cast<std::size_t>(-1)) {
      group = sum_pos.size();
      sum_pos.push_back(Point{0.0, 0.0});
      sum_w.push_back(complexd{});
      count.push_back(0);
      cell_to_group[{cx, cy}] = group;
    }
    sum_pos[group][0] += d.z[0];
    sum_pos[group][1] += d.z[1];
    sum_w[group] += d.w;
    count[group] += 1;
  }
  std::vector<Point> pts;
  std::vector<complexd> ws;
  for (std::size_t g = 0; g < sum_pos.size(); ++g) {
    pts.push_back(Point{sum_pos[g][0] / count[g], sum_pos[g][1] / count[g]});
    ws.push_back(sum_w[g]);
  }
  return {std::move(pts), std::move(ws)};
}

}  // namespace

Autocorrelation autocorrelation(const WeightedDiracComb& mu,
                                const VanHoveFamily& fam, long n,
                                const AutocorrOptions& opt) {
  if (!mu.discreteness_radius())
    throw NotUniformlyDiscrete(
        "autocorrelation: comb has no discreteness radius; refusing pair sweep");
  const BoxWindow A = fam.window(n);
  mu.ensure_covers(A, "autocorrelation");

  const auto idx = mu.indices_in(A);
  std::vector<Diff> diffs;
  // With discreteness radius r there are O(z_max/r) neighbours per atom.
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const Point& xa = mu.point(idx[a]);
    for (std::size_t b = a; b < idx.size(); ++b) {
      const Point& xb = mu.point(idx[b]);
      if (xb[0] - xa[0] > opt.z_max) break;
      if (mu.dim() == 2 && std::abs(xb[1] - xa[1]) > opt.z_max) continue;
      const complexd w = mu.weight(idx[b]) * std::conj(mu.weight(idx[a]));
      diffs.push_back(Diff{sub(xb, xa), w});
      if (b != a) diffs.push_back(Diff{sub(xa, xb), std::conj(w)});
    }
  }

  auto [pts, ws] = mu.dim() == 1 ? merge_diffs_1d(diffs, opt.cluster_tol)
                                 : merge_diffs_2d(diffs, opt.cluster_tol);
  const double inv_vol = 1.0 / A.volume();
  for (auto& w : ws) w *= inv_vol;

  Point zlo, zhi;
  for (int i = 0; i < mu.dim(); ++i) {
    zlo[i] = -opt.z_max;
    zhi[i] = std::nextafter(opt.z_max, INFINITY);
  }
  // The difference set is denser than the source set, so it carries no
  // discreteness radius of its own; merged clusters are at least cluster_tol
  // apart, which the reduced match_tol reflects.
  Autocorrelation gamma{
      WeightedDiracComb(mu.dim(), std::move(pts), std::move(ws),
                        BoxWindow(mu.dim(), zlo, zhi), std::nullopt,
                        opt.cluster_tol * 0.5),
      fam.description(),
      n,
      opt.cluster_tol,
      opt.z_max,
      0.0};
  BoxWindow K(mu.dim(), zlo, zhi);
  gamma.boundary_loss_bound = A.k_boundary_volume(K) / A.volume();
  return gamma;
}

ConvergenceReport pair_correlation(const WeightedDiracComb& lambda,
                                   const Point& z, const VanHoveFamily& fam,
                                   const NRange& ns,
                                   const ConvergenceOptions& conv,
                                   double match_tol) {
  if (!lambda.unit_weights())
    throw std::invalid_argument("pair_correlation: expects a unit-weight point set");
  lambda.ensure_covers(fam.window(ns.max_n()), "pair_correlation");
  std::vector<complexd> est;
  est.reserve(ns.values.size());
  for (long n : ns.values) {
    const BoxWindow A = fam.window(n);
    std::size_t count = 0;
    lambda.for_each_in(A, [&](std::size_t i) {
      // x in Lambda and x in z + Lambda, i.e. x - z is an atom.
      if (lambda.find(sub(lambda.point(i), z), match_tol) != WeightedDiracComb::npos)
        ++count;
    });
    est.push_back(complexd{static_cast<double>(count) / A.volume(), 0.0});
  }
  return detect_limit(ns.values, std::move(est), conv);
}

EberleinResult eberlein_fn(const FnD& f, const FnD& g, int dim,
                           const VanHoveFamily& fam, const NRange& ns,
                           const std::vector<Point>& t_grid,
                           const QuadratureOptions& quad,
                           const ConvergenceOptions& conv) {
  EberleinResult out;
  out.t_grid = t_grid;
  for (const Point& t : t_grid) {
    const FnD integrand = [&f, &g, t](const Point& s) {
      return f(s) * g(sub(t, s));
    };
    std::vector<complexd> est;
    est.reserve(ns.values.size());
    for (long n : ns.values)
      est.push_back(window_mean_fn(integrand, dim, fam.window(n), quad));
    out.reports.push_back(detect_limit(ns.values, std::move(est), conv));
    out.limits.push_back(out.reports.back().value());
  }
  return out;
}

double tent_self_convolution(double w, double z) {
  const double u = std::abs(z) / w;
  if (u >= 2.0) return 0.0;
  if (u <= 1.0) return w * (2.0 / 3.0 - u * u + u * u * u / 2.0);
  const double v = 2.0 - u;
  return w * v * v * v / 6.0;
}

double tent_self_convolution(const TentFunction& phi, const Point& z) {
  double out = 1.0;
  for (int i = 0; i < phi.dim; ++i) out *= tent_self_convolution(phi.halfwidth, z[i]);
  return out;
}

}  // namespace diffract
