#pragma once

#include <cstddef>

#include "circlebound/polynomial.hpp"

namespace circlebound {

enum class ExtremumKind { maximum, minimum };

const char* to_string(ExtremumKind kind);

/// max or min of |p| over the circle |z| = radius.
struct CircleExtremum {
  double radius = 0.0;
  ExtremumKind kind = ExtremumKind::maximum;
  double value = 0.0;
  double angle = 0.0;     // an attaining angle in [0, 2*pi)
  double residual = 0.0;  // bracket width when refinement stopped
};

/// M(p, r) = max_{|z|=r} |p(z)|.
///
/// Samples max(4096, 64 n) equally spaced angles, then refines the eight
/// best local maxima by golden-section search on |p(r e^{it})|^2 down to a
/// bracket width of 1e-14. The reported value is |p| at the reported angle.
CircleExtremum max_modulus(const Polynomial& p, double r);

/// min_{|z|=r} |p(z)|, same scheme as max_modulus.
CircleExtremum min_modulus(const Polynomial& p, double r);

/// Extremum of |p(r e^{2 pi i k / samples})| over k = 0..samples-1. A lower
/// bound for the true maximum, an upper bound for the true minimum. Kept
/// independent of the refinement path.
double grid_oracle(const Polynomial& p, double r, ExtremumKind kind, std::size_t samples);

}  // namespace circlebound
