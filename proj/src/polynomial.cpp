#include "circlebound/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace circlebound {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_polynomial: return "invalid-polynomial";
    case ErrorKind::not_lacunary: return "not-lacunary";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::numeric_failure: return "numeric-failure";
    case ErrorKind::generator_exhausted: return "generator-exhausted";
    case ErrorKind::parse: return "parse-error";
  }
  return "unknown";
}

Polynomial::Polynomial(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() < 2) {
    throw Error(ErrorKind::invalid_polynomial,
                "polynomial needs at least two coefficients (degree >= 1)");
  }
  for (const auto& a : coefficients_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorKind::invalid_polynomial, "polynomial coefficients must be finite");
    }
  }
  if (coefficients_.back() == Complex(0.0, 0.0)) {
    throw Error(ErrorKind::invalid_polynomial, "leading coefficient must be nonzero");
  }
}

Polynomial::Polynomial(ConstantTag, std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {}

Polynomial Polynomial::from_real(std::span<const double> coefficients) {
  std::vector<Complex> c(coefficients.begin(), coefficients.end());
  return Polynomial(std::move(c));
}

double Polynomial::coefficient_scale() const noexcept {
  double scale = 0.0;
  for (const auto& a : coefficients_) scale = std::max(scale, std::abs(a));
  return scale;
}

Complex evaluate(const Polynomial& p, Complex z) {
  // Real arithmetic keeps the loop free of the NaN-recovery path of
  // std::complex multiplication.
  const auto c = p.coefficients();
  const double x = z.real();
  const double y = z.imag();
  double re = c.back().real();
  double im = c.back().imag();
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    const double t = re * x - im * y + c[j].real();
    im = re * y + im * x + c[j].imag();
    re = t;
  }
  return {re, im};
}

Polynomial derivative(const Polynomial& p) {
  const auto c = p.coefficients();
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = static_cast<double>(j) * c[j];
  if (d.size() == 1) return Polynomial(Polynomial::ConstantTag{}, std::move(d));
  return Polynomial(std::move(d));
}

Polynomial scale_argument(const Polynomial& p, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorKind::invalid_parameter,
                "scale factor must be positive and finite, got " + std::to_string(c));
  }
  const auto a = p.coefficients();
  std::vector<Complex> scaled(a.size());
  double power = 1.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    scaled[j] = a[j] * power;
    power *= c;
  }
  return Polynomial(std::move(scaled));
}

LacunaryProfile lacunary_profile(const Polynomial& p, double rel_tol) {
  const auto a = p.coefficients();
  const double threshold = rel_tol * p.coefficient_scale();
  const double a0 = std::abs(a[0]);
  if (!(a0 > threshold)) {
    throw Error(ErrorKind::not_lacunary,
                "constant term vanishes; p is not of the form a_0 + sum_{j>=mu} a_j z^j with a_0 != 0");
  }
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (std::abs(a[j]) > threshold) {
      return LacunaryProfile{static_cast<int>(j), std::abs(a[j]) / a0};
    }
  }
  throw Error(ErrorKind::degenerate, "all non-constant coefficients are below tolerance");
}

Polynomial from_roots(Complex lead, std::span<const Complex> roots) {
  std::vector<Complex> c{lead};
  c.reserve(roots.size() + 1);
  for (const auto& root : roots) {
    c.push_back(c.back());
    for (std::size_t j = c.size() - 2; j > 0; --j) c[j] = c[j - 1] - root * c[j];
    c[0] = -root * c[0];
  }
  return Polynomial(std::move(c));
}

}  // namespace circlebound
