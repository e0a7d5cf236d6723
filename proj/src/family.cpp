#include "diffract/family.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace diffract {

VanHoveFamily::VanHoveFamily(FamilyKind kind, double param, int dim,
                             std::string desc)
    : kind_(kind), param_(param), dim_(dim), description_(std::move(desc)) {}

VanHoveFamily VanHoveFamily::symmetric(int dim) {
  return VanHoveFamily(FamilyKind::symmetric, 0.0, dim, "symmetric [-n, n]");
}

VanHoveFamily VanHoveFamily::skew(double b, int dim) {
  if (!(b > 0.0)) throw std::invalid_argument("skew family: b must be > 0");
  std::ostringstream os;
  os << "skew [-n, " << b << "n]";
  return VanHoveFamily(FamilyKind::skew, b, dim, os.str());
}

VanHoveFamily VanHoveFamily::quadratic(int dim) {
  return VanHoveFamily(FamilyKind::quadratic, 0.0, dim, "quadratic [-n, n^2]");
}

VanHoveFamily VanHoveFamily::alternating(int dim) {
  return VanHoveFamily(FamilyKind::alternating, 0.0, dim,
                       "alternating [-n, (2+(-1)^n)n]");
}

VanHoveFamily VanHoveFamily::shifted(double rate, int dim) {
  std::ostringstream os;
  os << "shifted " << rate << "n + [-n, n]";
  return VanHoveFamily(FamilyKind::shifted, rate, dim, os.str());
}

BoxWindow VanHoveFamily::window(long n) const {
  if (n < 1) throw std::invalid_argument("VanHoveFamily: n must be >= 1");
  const double nd = static_cast<double>(n);
  double lo = -nd, hi = nd;
  switch (kind_) {
    case FamilyKind::symmetric: break;
    case FamilyKind::skew: hi = param_ * nd; break;
    case FamilyKind::quadratic: hi = nd * nd; break;
    case FamilyKind::alternating: hi = (2.0 + (n % 2 == 0 ? 1.0 : -1.0)) * nd; break;
    case FamilyKind::shifted: lo = param_ * nd - nd; hi = param_ * nd + nd; break;
  }
  if (dim_ == 1) return BoxWindow::interval(lo, hi);
  return BoxWindow::box2(lo, hi, lo, hi);
}

double VanHoveFamily::boundary_ratio(long n, const BoxWindow& K) const {
  const BoxWindow A = window(n);
  return A.k_boundary_volume(K) / A.volume();
}

}  // namespace diffract
