#include "diffract/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diffract/summation.hpp"

namespace diffract {

std::string to_string(ConvergenceStatus s) {
  switch (s) {
    case ConvergenceStatus::converged: return "converged";
    case ConvergenceStatus::oscillating: return "oscillating";
    case ConvergenceStatus::undetermined: return "undetermined";
  }
  return "unknown";
}

complexd ConvergenceReport::value() const {
  if (status == ConvergenceStatus::converged) return limit;
  const std::size_t q = std::min<std::size_t>(
      estimates.size(), static_cast<std::size_t>(std::max(1, options.tail)));
  if (q == 0) return complexd{};
  complexd acc{};
  for (std::size_t i = estimates.size() - q; i < estimates.size(); ++i)
    acc += estimates[i];
  return acc / static_cast<double>(q);
}

double ConvergenceReport::limsup_real() const {
  if (status == ConvergenceStatus::converged) return limit.real();
  if (status == ConvergenceStatus::oscillating) {
    double m = -INFINITY;
    for (const auto& c : clusters) m = std::max(m, c.real());
    return m;
  }
  const std::size_t q = std::min<std::size_t>(
      estimates.size(), static_cast<std::size_t>(std::max(1, options.tail)));
  double m = -INFINITY;
  for (std::size_t i = estimates.size() - q; i < estimates.size(); ++i)
    m = std::max(m, estimates[i].real());
  return m;
}

namespace {

// Complete-linkage agglomeration of the tail values: merge clusters while the
// merged diameter stays below tol.
struct Cluster {
  std::vector<std::size_t> members;
};

double cluster_distance(const Cluster& a, const Cluster& b,
                        const std::vector<complexd>& v) {
  double d = 0.0;
  for (auto i : a.members)
    for (auto j : b.members) d = std::max(d, std::abs(v[i] - v[j]));
  return d;
}

}  // namespace

ConvergenceReport detect_limit(std::vector<long> n_values,
                               std::vector<complexd> estimates,
                               const ConvergenceOptions& options) {
  if (n_values.size() != estimates.size())
    throw std::invalid_argument("detect_limit: size mismatch");
  ConvergenceReport rep;
  rep.n_values = std::move(n_values);
  rep.estimates = std::move(estimates);
  rep.options = options;
  if (rep.estimates.empty()) return rep;

  const std::size_t q = std::min<std::size_t>(
      rep.estimates.size(), static_cast<std::size_t>(std::max(1, options.tail)));
  std::vector<complexd> tail(rep.estimates.end() - q, rep.estimates.end());

  double spread = 0.0;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      spread = std::max(spread, std::abs(tail[i] - tail[j]));
  rep.tail_spread = spread;

  if (spread < options.tol) {
    rep.status = ConvergenceStatus::converged;
    rep.limit = pairwise_sum(q, [&](std::size_t i) { return tail[i]; }) /
                static_cast<double>(q);
    return rep;
  }

  std::vector<Cluster> clusters;
  for (std::size_t i = 0; i < q; ++i) clusters.push_back(Cluster{{i}});
  for (;;) {
    double best = INFINITY;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const double d = cluster_distance(clusters[i], clusters[j], tail);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    if (clusters.size() <= 1 || best >= options.tol) break;
    auto& dst = clusters[bi].members;
    dst.insert(dst.end(), clusters[bj].members.begin(), clusters[bj].members.end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
  }

  // A drifting sequence would split into well-separated singletons; demand at
  // least two tail members per cluster on average before calling it a genuine
  // oscillation between subsequence limits.
  if (clusters.size() >= 2 && clusters.size() * 2 <= q) {
    double min_sep = INFINITY;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = i + 1; j < clusters.size(); ++j)
        min_sep = std::min(min_sep, cluster_distance(clusters[i], clusters[j], tail));
    if (min_sep >= options.separation_factor * options.tol) {
      rep.status = ConvergenceStatus::oscillating;
      for (const auto& c : clusters) {
        complexd acc{};
        for (auto i : c.members) acc += tail[i];
        rep.clusters.push_back(acc / static_cast<double>(c.members.size()));
      }
      std::sort(rep.clusters.begin(), rep.clusters.end(),
                [](const complexd& a, const complexd& b) {
                  if (a.real() != b.real()) return a.real() < b.real();
                  return a.imag() < b.imag();
                });
      return rep;
    }
  }
  rep.status = ConvergenceStatus::undetermined;
  return rep;
}

NRange NRange::consecutive(long lo, long hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("NRange: bad bounds");
  NRange r;
  for (long n = lo; n <= hi; ++n) r.values.push_back(n);
  return r;
}

NRange NRange::single(long n) {
  NRange r;
  r.values.push_back(n);
  return r;
}

NRange NRange::geometric_with_tail(long n_min, long n_max, int coarse, int tail) {
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("NRange: bad bounds");
  NRange r;
  const long tail_lo = std::max<long>(n_min, n_max - tail + 1);
  if (coarse > 0 && tail_lo > n_min) {
    const double ratio =
        std::pow(static_cast<double>(tail_lo) / n_min, 1.0 / coarse);
    double v = static_cast<double>(n_min);
    for (int i = 0; i < coarse; ++i) {
      const long n = std::lround(v);
      if (r.values.empty() || n > r.values.back()) r.values.push_back(n);
      v *= ratio;
    }
  }
  for (long n = tail_lo; n <= n_max; ++n) {
    if (r.values.empty() || n > r.values.back()) r.values.push_back(n);
  }
  return r;
}

long NRange::max_n() const {
  long m = 0;
  for (long n : values) m = std::max(m, n);
  return m;
}

}  // namespace diffract
