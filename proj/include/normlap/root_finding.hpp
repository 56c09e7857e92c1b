#pragma once

#include <cmath>
#include <string>

#include "normlap/error.hpp"

namespace normlap {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  double width() const noexcept { return upper - lower; }
};

struct BisectionOptions {
  double tolerance = 1e-13;  // absolute bracket width at which to stop
  int max_iterations = 200;
};

// Bisection on a bracket whose endpoint values have opposite signs (or one is
// zero). Returns the midpoint of the final bracket.
template <typename Function>
double bisect(Function&& f, Interval bracket, BisectionOptions options = {}) {
  double lo = bracket.lower;
  double hi = bracket.upper;
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw Error(ErrorCode::NoSignChange, "f(" + std::to_string(lo) + ")=" + std::to_string(f_lo) +
                                             " and f(" + std::to_string(hi) + ")=" +
                                             std::to_string(f_hi) + " share a sign");
  }
  for (int it = 0; it < options.max_iterations && hi - lo > options.tolerance; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // one ulp left
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace normlap
