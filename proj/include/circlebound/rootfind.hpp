#pragma once

#include <vector>

#include "circlebound/polynomial.hpp"

namespace circlebound {

/// Absolute tolerance on root modulus used when certifying a zero-free disk.
inline constexpr double kCertificationTolerance = 1e-9;

/// Evidence that p has no zeros in the open disk |z| < K.
struct ZeroFreeCertificate {
  double K = 0.0;
  double min_root_modulus = 0.0;
  double margin = 0.0;  // min_root_modulus - K
  bool holds = false;
  std::vector<Complex> roots;
};

/// All n roots of p, with multiplicity, in unspecified order.
///
/// Aberth-Ehrlich simultaneous iteration started from a circle of radius
/// |a_0/a_n|^(1/n), followed by a short Newton polish. Exact zero roots
/// (vanishing low-order coefficients) are split off before iterating. Every
/// returned root satisfies
///   |p(z_i)| <= 1e-8 * max_j|a_j| * max(1, |z_i|)^n,
/// otherwise NumericFailure is thrown with the last iterate.
std::vector<Complex> find_roots(const Polynomial& p);

/// holds iff min_i |z_i| >= K - kCertificationTolerance. A root on |z| = K
/// is allowed since the hypothesis concerns the open disk.
ZeroFreeCertificate certify_zero_free(const Polynomial& p, double K);

}  // namespace circlebound
