#include "diffract/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "diffract/summation.hpp"

namespace diffract {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Phase rotators are re-synchronised from std::polar every block; partial
// block sums are then combined with the fixed pairwise tree.
constexpr std::size_t kBlock = 4096;

struct Accum {
  complexd mean{};
  double abs_p = 0.0;
  std::vector<complexd> fb;

  Accum& operator+=(const Accum& o) {
    mean += o.mean;
    abs_p += o.abs_p;
    if (fb.size() < o.fb.size()) fb.resize(o.fb.size());
    for (std::size_t i = 0; i < o.fb.size(); ++i) fb[i] += o.fb[i];
    return *this;
  }
};

Accum operator+(Accum a, const Accum& b) {
  a += b;
  return a;
}

Accum block_sum_1d(const FnD& f, double lo, double h, std::size_t j0,
                   std::size_t j1, std::span<const Point> freqs, double p) {
  Accum acc;
  acc.fb.assign(freqs.size(), complexd{});
  const double x0 = lo + (static_cast<double>(j0) + 0.5) * h;
  std::vector<complexd> rot(freqs.size()), step(freqs.size());
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    rot[k] = std::polar(1.0, -kTwoPi * freqs[k][0] * x0);
    step[k] = std::polar(1.0, -kTwoPi * freqs[k][0] * h);
  }
  for (std::size_t j = j0; j < j1; ++j) {
    const double x = lo + (static_cast<double>(j) + 0.5) * h;
    const complexd v = f(Point{x});
    acc.mean += v;
    if (p > 0.0) {
      const double a = std::abs(v);
      acc.abs_p += (p == 1.0) ? a : (p == 2.0 ? a * a : std::pow(a, p));
    }
    for (std::size_t k = 0; k < freqs.size(); ++k) {
      acc.fb[k] += v * rot[k];
      rot[k] *= step[k];
    }
  }
  return acc;
}

}  // namespace

FnD lift(const Fn1& f) {
  return [f](const Point& t) { return f(t[0]); };
}

WindowIntegrals window_integrals(const FnD& f, int dim, const BoxWindow& A,
                                 std::span<const Point> freqs, double p,
                                 const QuadratureOptions& quad) {
  if (!(quad.step > 0.0)) throw std::invalid_argument("quadrature step must be > 0");
  WindowIntegrals out;
  out.fb.assign(freqs.size(), complexd{});
  if (dim == 1) {
    const double lo = A.lower[0], hi = A.upper[0];
    const std::size_t m =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / quad.step)));
    const double h = (hi - lo) / static_cast<double>(m);
    const std::size_t blocks = (m + kBlock - 1) / kBlock;
    Accum total = pairwise_sum(blocks, [&](std::size_t b) {
      const std::size_t j0 = b * kBlock;
      const std::size_t j1 = std::min(m, j0 + kBlock);
      return block_sum_1d(f, lo, h, j0, j1, freqs, p);
    });
    const double inv = 1.0 / static_cast<double>(m);
    out.mean = total.mean * inv;
    out.mean_abs_p = total.abs_p * inv;
    for (std::size_t k = 0; k < freqs.size(); ++k) out.fb[k] = total.fb[k] * inv;
    return out;
  }

  // d = 2: tensor midpoint grid. Used for genericity tests only, so the plain
  // per-point std::polar evaluation is fine.
  const std::size_t m0 = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(A.side(0) / quad.step)));
  const std::size_t m1 = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(A.side(1) / quad.step)));
  const double h0 = A.side(0) / static_cast<double>(m0);
  const double h1 = A.side(1) / static_cast<double>(m1);
  Accum total;
  total.fb.assign(freqs.size(), complexd{});
  total = pairwise_sum(m0, [&](std::size_t i) {
    Accum row;
    row.fb.assign(freqs.size(), complexd{});
    const double x = A.lower[0] + (static_cast<double>(i) + 0.5) * h0;
    for (std::size_t j = 0; j < m1; ++j) {
      const double y = A.lower[1] + (static_cast<double>(j) + 0.5) * h1;
      const Point t{x, y};
      const complexd v = f(t);
      row.mean += v;
      if (p > 0.0) row.abs_p += std::pow(std::abs(v), p);
      for (std::size_t k = 0; k < freqs.size(); ++k) {
        const double phase = freqs[k][0] * x + freqs[k][1] * y;
        row.fb[k] += v * std::polar(1.0, -kTwoPi * phase);
      }
    }
    return row;
  });
  const double inv = 1.0 / (static_cast<double>(m0) * static_cast<double>(m1));
  out.mean = total.mean * inv;
  out.mean_abs_p = total.abs_p * inv;
  for (std::size_t k = 0; k < freqs.size(); ++k) out.fb[k] = total.fb[k] * inv;
  return out;
}

complexd window_mean_fn(const FnD& f, int dim, const BoxWindow& A,
                        const QuadratureOptions& quad) {
  return window_integrals(f, dim, A, {}, -1.0, quad).mean;
}

ConvergenceReport mean_along(const FnD& f, int dim, const VanHoveFamily& fam,
                             const NRange& ns, const QuadratureOptions& quad,
                             const ConvergenceOptions& conv) {
  std::vector<complexd> est;
  est.reserve(ns.values.size());
  for (long n : ns.values) est.push_back(window_mean_fn(f, dim, fam.window(n), quad));
  return detect_limit(ns.values, std::move(est), conv);
}

ConvergenceReport mean_along(const WeightedDiracComb& mu,
                             const VanHoveFamily& fam, const NRange& ns,
                             const ConvergenceOptions& conv) {
  mu.ensure_covers(fam.window(ns.max_n()), "mean_along");
  std::vector<complexd> est;
  est.reserve(ns.values.size());
  for (long n : ns.values) {
    const BoxWindow A = fam.window(n);
    est.push_back(mu.mass_in(A) / A.volume());
  }
  return detect_limit(ns.values, std::move(est), conv);
}

ConvergenceReport besicovitch_seminorm(const FnD& f, int dim, double p,
                                       const VanHoveFamily& fam, const NRange& ns,
                                       const QuadratureOptions& quad,
                                       const ConvergenceOptions& conv) {
  if (!(p >= 1.0)) throw std::invalid_argument("besicovitch_seminorm: p must be >= 1");
  std::vector<complexd> est;
  est.reserve(ns.values.size());
  for (long n : ns.values) {
    const auto wi = window_integrals(f, dim, fam.window(n), {}, p, quad);
    est.push_back(std::pow(wi.mean_abs_p, 1.0 / p));
  }
  return detect_limit(ns.values, std::move(est), conv);
}

ShiftGrid ShiftGrid::explicit_shifts(std::vector<double> xs) {
  ShiftGrid g;
  g.shifts.reserve(xs.size());
  for (double x : xs) g.shifts.push_back(Point{x});
  return g;
}

ShiftGrid ShiftGrid::standard(double period_hint, double span, int equispaced,
                              int random_count, unsigned long seed) {
  ShiftGrid g;
  for (int i = 0; i < equispaced; ++i) {
    g.shifts.push_back(
        Point{period_hint * static_cast<double>(i) / std::max(1, equispaced - 1)});
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-span / 2.0, span / 2.0);
  for (int i = 0; i < random_count; ++i) g.shifts.push_back(Point{u(rng)});
  return g;
}

ConvergenceReport weyl_seminorm(const FnD& f, int dim, double p,
                                const VanHoveFamily& fam, const NRange& ns,
                                const ShiftGrid& shifts,
                                const QuadratureOptions& quad,
                                const ConvergenceOptions& conv) {
  if (!(p >= 1.0)) throw std::invalid_argument("weyl_seminorm: p must be >= 1");
  if (shifts.shifts.empty())
    throw std::invalid_argument("weyl_seminorm: empty shift grid");
  std::vector<complexd> est;
  est.reserve(ns.values.size());
  for (long n : ns.values) {
    const BoxWindow A = fam.window(n);
    double best = 0.0;
    for (const Point& s : shifts.shifts) {
      const auto wi = window_integrals(f, dim, A.shifted(s), {}, p, quad);
      best = std::max(best, wi.mean_abs_p);
    }
    est.push_back(std::pow(best, 1.0 / p));
  }
  return detect_limit(ns.values, std::move(est), conv);
}

AmenabilityReport amenability_check(const FnD& f, int dim,
                                    const std::vector<VanHoveFamily>& families,
                                    const ShiftGrid& shifts, const NRange& ns,
                                    double tol, const QuadratureOptions& quad,
                                    const ConvergenceOptions& conv) {
  if (families.empty()) throw std::invalid_argument("amenability_check: no families");
  AmenabilityReport rep;
  for (const auto& fam : families) {
    AmenabilityFamilyResult fr;
    fr.family = fam.description();
    fr.all_converged = true;
    std::vector<complexd> limits;
    const auto use_shifts =
        shifts.shifts.empty() ? std::vector<Point>{Point{0.0}} : shifts.shifts;
    for (const Point& s : use_shifts) {
      std::vector<complexd> est;
      est.reserve(ns.values.size());
      for (long n : ns.values)
        est.push_back(window_mean_fn(f, dim, fam.window(n).shifted(s), quad));
      fr.per_shift.push_back(detect_limit(ns.values, std::move(est), conv));
      if (!fr.per_shift.back().converged()) fr.all_converged = false;
      limits.push_back(fr.per_shift.back().value());
    }
    for (std::size_t i = 0; i < limits.size(); ++i)
      for (std::size_t j = i + 1; j < limits.size(); ++j)
        fr.shift_spread = std::max(fr.shift_spread, std::abs(limits[i] - limits[j]));
    fr.limit = pairwise_sum(limits.size(), [&](std::size_t i) { return limits[i]; }) /
               static_cast<double>(limits.size());
    rep.families.push_back(std::move(fr));
  }
  bool ok = true;
  for (const auto& fr : rep.families) {
    if (!fr.all_converged || fr.shift_spread > tol) ok = false;
    for (const auto& other : rep.families)
      rep.limit_spread = std::max(rep.limit_spread, std::abs(fr.limit - other.limit));
  }
  rep.amenable = ok && rep.limit_spread <= tol;
  return rep;
}

EnlargedBallReport enlarged_ball_check(const FnD& f, int dim, const BoxWindow& A,
                                       complexd z, double r, double R,
                                       const std::vector<VanHoveFamily>& families,
                                       const ShiftGrid& shifts, const NRange& ns,
                                       const QuadratureOptions& quad) {
  if (!(R > r)) throw std::invalid_argument("enlarged_ball_check: need R > r");
  EnlargedBallReport rep;
  rep.base_ok = true;
  for (const Point& s : shifts.shifts) {
    const double dev = std::abs(window_mean_fn(f, dim, A.shifted(s), quad) - z);
    rep.base_worst = std::max(rep.base_worst, dev);
    if (dev >= r) rep.base_ok = false;
  }
  for (const auto& fam : families) {
    EnlargedBallFamilyResult fr;
    fr.family = fam.description();
    long first_good = -1;
    // scan from the largest tested n downwards; first_good_n is the smallest
    // tested n from which every later tested n stays inside U_R(z).
    for (std::size_t vi = ns.values.size(); vi-- > 0;) {
      const long n = ns.values[vi];
      bool all_in = true;
      for (const Point& s : shifts.shifts) {
        const double dev =
            std::abs(window_mean_fn(f, dim, fam.window(n).shifted(s), quad) - z);
        if (dev >= R) {
          all_in = false;
          break;
        }
      }
      if (all_in)
        first_good = n;
      else
        break;
    }
    fr.first_good_n = first_good;
    fr.ok = first_good >= 0;
    rep.families.push_back(fr);
  }
  return rep;
}

}  // namespace diffract
