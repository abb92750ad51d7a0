#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "circlebound/error.hpp"

namespace circlebound {

using Complex = std::complex<double>;

/// Dense complex polynomial a_0 + a_1 z + ... + a_n z^n, coefficients stored
/// in ascending order.
///
/// A Polynomial always has degree n >= 1 and a_n != 0 (compared exactly).
/// Near-zero leading coefficients are never trimmed: the caller owns the
/// degree. The single exception is the result of derivative() applied to a
/// linear polynomial, which is a flagged constant (see is_constant()).
class Polynomial {
 public:
  explicit Polynomial(std::vector<Complex> coefficients);
  Polynomial(std::initializer_list<Complex> coefficients)
      : Polynomial(std::vector<Complex>(coefficients)) {}

  /// Real coefficients, ascending order.
  static Polynomial from_real(std::span<const double> coefficients);

  std::span<const Complex> coefficients() const noexcept { return coefficients_; }
  const Complex& operator[](std::size_t j) const { return coefficients_[j]; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_constant() const noexcept { return coefficients_.size() == 1; }

  /// max_j |a_j|; the reference magnitude for relative tolerances.
  double coefficient_scale() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  struct ConstantTag {};
  Polynomial(ConstantTag, std::vector<Complex> coefficients);

  friend Polynomial derivative(const Polynomial& p);

  std::vector<Complex> coefficients_;
};

/// Gap structure of p(z) = a_0 + sum_{j>=mu} a_j z^j.
struct LacunaryProfile {
  int mu = 1;
  double ratio = 0.0;  // |a_mu| / |a_0|
};

inline constexpr double kDefaultLacunaryTolerance = 1e-12;

/// Horner evaluation in a single pass.
Complex evaluate(const Polynomial& p, Complex z);

/// p'. A linear p yields a flagged constant polynomial.
Polynomial derivative(const Polynomial& p);

/// Coefficients a_j c^j, i.e. the polynomial z -> p(c z). Throws
/// invalid_parameter unless c > 0.
Polynomial scale_argument(const Polynomial& p, double c);

/// mu is the smallest j in 1..n with |a_j| > rel_tol * max|a_k|.
/// Throws not_lacunary when a_0 is below the tolerance and degenerate when
/// every a_1..a_n is.
LacunaryProfile lacunary_profile(const Polynomial& p,
                                 double rel_tol = kDefaultLacunaryTolerance);

/// lead * prod_i (z - roots[i]).
Polynomial from_roots(Complex lead, std::span<const Complex> roots);

}  // namespace circlebound
