#include "circlebound/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace circlebound {
namespace {

constexpr int kMaxIterations = 200;
constexpr int kPolishSteps = 5;
constexpr double kCorrectionTolerance = 1e-14;
constexpr double kResidualTolerance = 1e-8;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
  Complex value;
  Complex slope;
  double rounding;  // running-error bound for value
};

Evaluation evaluate_with_slope(std::span<const Complex> c, Complex z) {
  Complex value = c.back();
  Complex slope = 0.0;
  double modulus_sum = std::abs(c.back());
  const double abs_z = std::abs(z);
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    slope = slope * z + value;
    value = value * z + c[j];
    modulus_sum = modulus_sum * abs_z + std::abs(c[j]);
  }
  return {value, slope, 8.0 * static_cast<double>(c.size()) * kEps * modulus_sum};
}

double residual_limit(std::span<const Complex> c, double scale, Complex z) {
  const int n = static_cast<int>(c.size()) - 1;
  return kResidualTolerance * scale * std::pow(std::max(1.0, std::abs(z)), n);
}

std::vector<Complex> initial_guesses(std::span<const Complex> c) {
  const int n = static_cast<int>(c.size()) - 1;
  const double radius = std::pow(std::abs(c.front()) / std::abs(c.back()), 1.0 / n);
  std::vector<Complex> z(n);
  // The offset keeps guesses off the real axis, where real-coefficient
  // iterations would otherwise stay trapped.
  constexpr double offset = 0.4;
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + offset;
    z[k] = std::polar(radius, angle);
  }
  return z;
}

// Aberth iteration on a polynomial with nonzero constant term.
std::vector<Complex> aberth(std::span<const Complex> c) {
  const std::size_t n = c.size() - 1;
  std::vector<Complex> z = initial_guesses(c);
  if (n == 1) {
    z[0] = -c[0] / c[1];
    return z;
  }
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Evaluation e = evaluate_with_slope(c, z[i]);
      if (std::abs(e.value) <= e.rounding) {
        done[i] = true;
        continue;
      }
      Complex sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      const Complex newton = e.value / e.slope;
      const Complex correction = newton / (1.0 - newton * sum);
      if (!std::isfinite(correction.real()) || !std::isfinite(correction.imag())) continue;
      z[i] -= correction;
      if (std::abs(correction) <= kCorrectionTolerance * (1.0 + std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  return z;
}

// Newton steps that only move a root when |p| strictly drops and the step
// stays well inside its neighbourhood, so clustered roots do not merge.
void polish(std::span<const Complex> c, std::vector<Complex>& z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i) nearest = std::min(nearest, std::abs(z[i] - z[j]));
    }
    for (int step = 0; step < kPolishSteps; ++step) {
      const Evaluation e = evaluate_with_slope(c, z[i]);
      if (std::abs(e.value) <= e.rounding || e.slope == Complex(0.0)) break;
      const Complex delta = e.value / e.slope;
      if (!(std::abs(delta) < 0.25 * nearest)) break;
      const Complex candidate = z[i] - delta;
      if (!(std::abs(evaluate_with_slope(c, candidate).value) < std::abs(e.value))) break;
      z[i] = candidate;
    }
  }
}

// Newton iteration on the (k-1)-th derivative, where a k-fold root of p is
// simple.
Complex refine_multiple_root(std::span<const Complex> c, std::size_t k, Complex start) {
  std::vector<Complex> q(c.begin(), c.end());
  for (std::size_t order = 1; order < k; ++order) {
    for (std::size_t j = 1; j < q.size(); ++j) q[j - 1] = static_cast<double>(j) * q[j];
    q.pop_back();
  }
  if (q.size() < 2) return start;
  Complex z = start;
  double best = std::abs(evaluate_with_slope(q, z).value);
  for (int iter = 0; iter < 20; ++iter) {
    const Evaluation e = evaluate_with_slope(q, z);
    if (std::abs(e.value) <= e.rounding || e.slope == Complex(0.0)) break;
    const Complex next = z - e.value / e.slope;
    const double value = std::abs(evaluate_with_slope(q, next).value);
    if (!(value < best)) break;
    best = value;
    z = next;
  }
  return z;
}

// Multiple roots come out of the iteration as a ring of approximations
// whose radius grows like eps^(1/k). Roots whose Weierstrass inclusion disks
// overlap are grouped; a group of k is collapsed onto the nearby root of
// p^(k-1) when that point is itself a root of p to working precision.
void merge_clusters(std::span<const Complex> c, std::vector<Complex>& z) {
  const std::size_t n = z.size();
  if (n < 2) return;
  const double lead = std::abs(c.back());
  std::vector<double> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Evaluation e = evaluate_with_slope(c, z[i]);
    double denom = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= std::abs(z[i] - z[j]);
    }
    radius[i] = static_cast<double>(n) * std::max(std::abs(e.value), e.rounding) / denom;
  }

  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) <= radius[i] + radius[j]) parent[find(i)] = find(j);
    }
  }

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (const auto& group : groups) {
    if (group.size() < 2) continue;
    Complex centroid = 0.0;
    for (const std::size_t i : group) centroid += z[i];
    centroid /= static_cast<double>(group.size());
    const Complex root = refine_multiple_root(c, group.size(), centroid);
    const Evaluation e = evaluate_with_slope(c, root);
    if (std::abs(e.value) <= e.rounding) {
      for (const std::size_t i : group) z[i] = root;
    }
  }
}

}  // namespace

std::vector<Complex> find_roots(const Polynomial& p) {
  if (p.degree() < 1) {
    throw Error(ErrorKind::invalid_parameter, "find_roots needs degree >= 1");
  }
  const auto all = p.coefficients();
  std::size_t zeros = 0;
  while (all[zeros] == Complex(0.0)) ++zeros;

  std::vector<Complex> roots(zeros, Complex(0.0));
  const auto c = all.subspan(zeros);
  if (c.size() >= 2) {
    std::vector<Complex> z = aberth(c);
    polish(c, z);
    merge_clusters(c, z);
    roots.insert(roots.end(), z.begin(), z.end());
  }

  const double scale = p.coefficient_scale();
  for (const auto& root : roots) {
    const double residual = std::abs(evaluate(p, root));
    if (!(residual <= residual_limit(all, scale, root))) {
      throw NumericFailure("root finder did not converge: residual " + std::to_string(residual) +
                               " at root (" + std::to_string(root.real()) + ", " +
                               std::to_string(root.imag()) + ")",
                           roots);
    }
  }
  return roots;
}

ZeroFreeCertificate certify_zero_free(const Polynomial& p, double K) {
  if (!(K > 0.0) || !std::isfinite(K)) {
    throw Error(ErrorKind::invalid_parameter, "disk radius K must be positive");
  }
  ZeroFreeCertificate cert;
  cert.K = K;
  cert.roots = find_roots(p);
  cert.min_root_modulus = std::numeric_limits<double>::infinity();
  for (const auto& root : cert.roots) {
    cert.min_root_modulus = std::min(cert.min_root_modulus, std::abs(root));
  }
  cert.margin = cert.min_root_modulus - K;
  cert.holds = cert.margin >= -kCertificationTolerance;
  return cert;
}

}  // namespace circlebound
