#include "circlebound/circle_extrema.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "circlebound/golden_section.hpp"

namespace circlebound {

const char* to_string(ExtremumKind kind) {
  return kind == ExtremumKind::maximum ? "maximum" : "minimum";
}

namespace {

constexpr std::size_t kMinSamples = 4096;
constexpr std::size_t kSamplesPerDegree = 64;
constexpr std::size_t kRefinedBrackets = 8;
constexpr double kBracketWidth = 1e-14;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{2 pi i k / n} as a product of a coarse and a fine table entry, which
// needs O(sqrt n) trigonometric calls instead of n.
class UnitRoots {
 public:
  explicit UnitRoots(std::size_t n) : n_(n) {
    block_ = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    fine_.resize(block_);
    coarse_.resize((n + block_ - 1) / block_);
    for (std::size_t s = 0; s < fine_.size(); ++s) fine_[s] = std::polar(1.0, angle(s));
    for (std::size_t q = 0; q < coarse_.size(); ++q) coarse_[q] = std::polar(1.0, angle(q * block_));
  }

  Complex operator()(std::size_t k) const {
    const Complex a = coarse_[k / block_];
    const Complex b = fine_[k % block_];
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
  }

  double angle(std::size_t k) const { return kTwoPi * static_cast<double>(k) / static_cast<double>(n_); }

 private:
  std::size_t n_;
  std::size_t block_;
  std::vector<Complex> fine_;
  std::vector<Complex> coarse_;
};

double squared_modulus(const Polynomial& p, double r, double theta) {
  return std::norm(evaluate(p, std::polar(r, theta)));
}

void require_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::invalid_parameter, "circle radius must be positive, got " + std::to_string(r));
  }
}

CircleExtremum circle_extremum(const Polynomial& p, double r, ExtremumKind kind) {
  require_radius(r);
  const std::size_t n = static_cast<std::size_t>(std::max(p.degree(), 0));
  const std::size_t samples = std::max(kMinSamples, kSamplesPerDegree * n);
  const bool maximize = kind == ExtremumKind::maximum;
  // Minimise `score` in both cases.
  const double sign = maximize ? -1.0 : 1.0;

  const UnitRoots roots(samples);
  std::vector<double> score(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    score[k] = sign * std::norm(evaluate(p, r * roots(k)));
  }

  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < samples; ++k) {
    const double prev = score[(k + samples - 1) % samples];
    const double next = score[(k + 1) % samples];
    if (score[k] <= prev && score[k] <= next) candidates.push_back(k);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
  if (candidates.size() > kRefinedBrackets) candidates.resize(kRefinedBrackets);

  double best_angle = roots.angle(candidates.front());
  double best_score = sign * squared_modulus(p, r, best_angle);
  double residual = roots.angle(2);
  const double step = roots.angle(1);
  for (const std::size_t k : candidates) {
    const double center = roots.angle(k);
    const auto refined = golden_section_minimize(
        [&](double t) { return sign * squared_modulus(p, r, t); }, center - step, center + step,
        kBracketWidth);
    if (refined.fx < best_score) {
      best_score = refined.fx;
      best_angle = refined.x;
      residual = refined.width;
    }
  }

  best_angle = std::fmod(best_angle, kTwoPi);
  if (best_angle < 0.0) best_angle += kTwoPi;
  if (best_angle >= kTwoPi) best_angle = 0.0;

  CircleExtremum result;
  result.radius = r;
  result.kind = kind;
  result.angle = best_angle;
  result.value = std::abs(evaluate(p, std::polar(r, best_angle)));
  result.residual = residual;
  return result;
}

}  // namespace

CircleExtremum max_modulus(const Polynomial& p, double r) {
  return circle_extremum(p, r, ExtremumKind::maximum);
}

CircleExtremum min_modulus(const Polynomial& p, double r) {
  return circle_extremum(p, r, ExtremumKind::minimum);
}

double grid_oracle(const Polynomial& p, double r, ExtremumKind kind, std::size_t samples) {
  require_radius(r);
  if (samples < 16) {
    throw Error(ErrorKind::invalid_parameter, "grid oracle needs at least 16 samples");
  }
  const UnitRoots roots(samples);
  const bool maximize = kind == ExtremumKind::maximum;
  double best = maximize ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const double v = std::abs(evaluate(p, r * roots(k)));
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

}  // namespace circlebound
