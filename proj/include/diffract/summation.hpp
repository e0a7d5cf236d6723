#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>

namespace diffract {

/// Fixed-index pairwise (tree) summation. Every reduction in the library goes
/// through this so that results do not depend on how work is scheduled: the
/// tree is a function of the index range alone.
template <class F>
auto pairwise_sum(std::size_t count, F&& term) -> decltype(term(std::size_t{0})) {
  using T = decltype(term(std::size_t{0}));
  struct Rec {
    F& f;
    T run(std::size_t lo, std::size_t hi) {
      if (hi - lo <= 16) {
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += f(i);
        return acc;
      }
      const std::size_t mid = lo + (hi - lo) / 2;
      return run(lo, mid) + run(mid, hi);
    }
  };
  if (count == 0) return T{};
  Rec rec{term};
  return rec.run(0, count);
}

template <class T>
T pairwise_sum(std::span<const T> values) {
  return pairwise_sum(values.size(), [&](std::size_t i) { return values[i]; });
}

}  // namespace diffract
