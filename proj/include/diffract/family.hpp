#pragma once

#include <string>

#include "diffract/geometry.hpp"

namespace diffract {

enum class FamilyKind { symmetric, skew, quadratic, alternating, shifted };

/// A parametric van Hove family n -> A_n of averaging windows. In d = 1:
///   symmetric    A_n = [-n, n]
///   skew(b)      A_n = [-n, b n],            b > 0
///   quadratic    A_n = [-n, n^2]
///   alternating  A_n = [-n, (2 + (-1)^n) n]
///   shifted(r)   A_n = r n + [-n, n]
/// In d = 2 the same recipe applies per coordinate.
class VanHoveFamily {
 public:
  static VanHoveFamily symmetric(int dim = 1);
  static VanHoveFamily skew(double b, int dim = 1);
  static VanHoveFamily quadratic(int dim = 1);
  static VanHoveFamily alternating(int dim = 1);
  static VanHoveFamily shifted(double rate, int dim = 1);

  BoxWindow window(long n) const;
  FamilyKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double parameter() const { return param_; }
  const std::string& description() const { return description_; }

  /// van Hove diagnostic |d^K A_n| / |A_n| for a box K.
  double boundary_ratio(long n, const BoxWindow& K) const;

 private:
  VanHoveFamily(FamilyKind kind, double param, int dim, std::string desc);

  FamilyKind kind_;
  double param_;
  int dim_;
  std::string description_;
};

}  // namespace diffract
