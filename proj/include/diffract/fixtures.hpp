#pragma once

#include <string>
#include <vector>

#include "diffract/averaging.hpp"
#include "diffract/comb.hpp"
#include "diffract/model_sets.hpp"

namespace diffract {

/// delta_{spacing Z} over [lo, hi].
WeightedDiracComb lattice_comb(double lo, double hi, double spacing = 1.0);

/// The a-defect of Z: the integers with the right half-line slipped by the
/// phase a, generated over [lo, hi]. Atoms: {-n : n >= 1} and {n - a : n >= 1}.
WeightedDiracComb a_defect_comb(double a, double lo, double hi);

/// {n, -2n : n >= 1} over [lo, hi].
WeightedDiracComb n_minus_2n_comb(double lo, double hi);

/// sum_{n>=1} sum_{k=1}^{n} delta_{2^n + k} over [lo, hi]: exponentially
/// sparse blocks of consecutive integers.
WeightedDiracComb exponential_blocks_comb(double lo, double hi);

/// Fibonacci model set over [lo, hi] (CutProjectScheme::fibonacci()).
WeightedDiracComb fibonacci_comb(double lo, double hi);

/// The ramp step function: 0 for x < 0, x on [0, 1], 1 for x > 1.
Fn1 step_ramp_function();

/// Generator registry used by the CLI: name + parameter list -> comb.
WeightedDiracComb make_fixture(const std::string& name,
                               const std::vector<double>& params, double lo,
                               double hi);

std::vector<std::string> fixture_names();

}  // namespace diffract
