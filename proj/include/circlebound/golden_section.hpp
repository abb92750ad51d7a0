#pragma once

#include <cmath>

namespace circlebound {

struct GoldenSectionResult {
  double x;
  double fx;
  double width;  // final bracket width
};

/// Golden-section search for a minimum of f on [lo, hi]. f is assumed
/// unimodal on the bracket; the iteration stops once the bracket is no wider
/// than width_tol or stops shrinking in floating point.
template <typename F>
GoldenSectionResult golden_section_minimize(F&& f, double lo, double hi, double width_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > width_tol) {
    const double previous = hi - lo;
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
    if (!(hi - lo < previous)) break;
  }
  return f1 <= f2 ? GoldenSectionResult{x1, f1, hi - lo} : GoldenSectionResult{x2, f2, hi - lo};
}

}  // namespace circlebound
