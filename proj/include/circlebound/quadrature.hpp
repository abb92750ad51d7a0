#pragma once

#include <cmath>

#include "circlebound/error.hpp"

namespace circlebound {

/// Adaptive Simpson quadrature with interval bisection.
///
/// A panel is accepted when |S_left + S_right - S_whole| <= 15 * tol, the
/// tolerance being halved at each bisection so the total error stays near
/// abs_tol. Reaching max_depth on an unconverged panel throws
/// NumericFailure.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol, int max_depth = 40) {
  if (a == b) return 0.0;

  struct Recurse {
    F& f;
    int max_depth;

    double operator()(double a, double b, double fa, double fm, double fb, double whole, double tol,
                      int depth) const {
      const double m = 0.5 * (a + b);
      const double lm = 0.5 * (a + m);
      const double rm = 0.5 * (m + b);
      const double flm = f(lm);
      const double frm = f(rm);
      const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      const double delta = left + right - whole;
      if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
      if (depth >= max_depth) {
        throw NumericFailure("adaptive Simpson reached maximum depth without converging", {});
      }
      return (*this)(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
             (*this)(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
  };

  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return Recurse{f, max_depth}(a, b, fa, fm, fb, whole, abs_tol, 0);
}

}  // namespace circlebound
