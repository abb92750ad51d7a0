#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace circlebound {

enum class ErrorKind {
  invalid_parameter,
  invalid_polynomial,
  not_lacunary,
  degenerate,
  numeric_failure,
  generator_exhausted,
  parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an iterative method stops without meeting its acceptance test.
/// Carries the last iterate so callers can inspect or report it.
class NumericFailure : public Error {
 public:
  NumericFailure(const std::string& what, std::vector<std::complex<double>> best_iterate)
      : Error(ErrorKind::numeric_failure, what), best_iterate_(std::move(best_iterate)) {}

  const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_iterate_; }

 private:
  std::vector<std::complex<double>> best_iterate_;
};

}  // namespace circlebound
