#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circlebound/bounds.hpp"
#include "circlebound/polynomial.hpp"

namespace circlebound {

/// Generator and suite configuration. Each (seed, trial) pair determines one
/// instance.
struct GenConfig {
  std::uint64_t seed = 42;
  int trials = 100;
  int degree_min = 2;
  int degree_max = 10;
  double K = 1.0;                  // generated instances have no zeros in |z| < K
  std::optional<int> mu;           // forces the lacunary generator
  double root_modulus_max = 10.0;  // cap on generated root moduli
  std::optional<std::pair<Complex, Complex>> alpha_beta;  // extremal family ((a + b z)/2)^n
  bool real_coefficients = false;  // conjugate-paired roots / real coefficients

  /// Throws invalid_parameter on an inconsistent configuration.
  void validate() const;

  friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

inline constexpr int kMaxFuzzDegree = 12;
inline constexpr int kLacunaryRejectionCap = 10000;

/// Property identifiers. The first nine mirror the bound-catalog invariants
/// in order; the rest check the extremum engine and the generators.
enum class Property {
  upper_bound,           // every applicable bound <= M(p, r)
  ordering_rivlin,       // cor26 >= rivlin >= varga
  ordering_two_radius,   // cor24 >= govil_two_radius
  reductions,            // K=1 / R=1 specialisations agree
  equality,              // extremal families attain the bounds
  derivative_bound,      // max|p'| <= n/(1+K) (M(p,1) - m(p,K))
  bernstein,             // classical upper bounds
  qazi_refinement,       // integral form >= simple form
  thm21_variant_order,   // proof numerator <= statement numerator for mu > 1
  oracle_agreement,      // refined extrema agree with the grid oracle
  radius_monotonicity,   // M(p, r) nondecreasing in r
  generator_soundness,   // instances satisfy their hypotheses
};

inline constexpr std::array<Property, 12> kAllProperties = {
    Property::upper_bound,      Property::ordering_rivlin,     Property::ordering_two_radius,
    Property::reductions,       Property::equality,            Property::derivative_bound,
    Property::bernstein,        Property::qazi_refinement,     Property::thm21_variant_order,
    Property::oracle_agreement, Property::radius_monotonicity, Property::generator_soundness,
};

const char* to_string(Property property);
std::optional<Property> property_from_string(std::string_view name);

/// A failed check, with enough data to replay it.
struct Violation {
  std::uint64_t trial = 0;
  std::string property;
  std::string check;
  std::vector<Complex> coefficients;
  std::map<std::string, double> parameters;
  double bound = 0.0;
  double measured = 0.0;
  double deficit = 0.0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// A trial that could not be evaluated (numeric failure, exhausted generator).
struct Incident {
  std::uint64_t trial = 0;
  std::string kind;
  std::string message;

  friend bool operator==(const Incident&, const Incident&) = default;
};

struct FuzzReport {
  GenConfig config;
  std::vector<std::string> properties;
  std::map<std::string, std::uint64_t> checked;
  std::vector<Violation> violations;
  /// Exceedances of the stated (unproven) numerator of the lacunary theorem.
  /// Informational; they never fail the suite.
  std::vector<Violation> findings;
  std::vector<Incident> incidents;
  double elapsed_seconds = 0.0;

  bool passed() const { return violations.empty(); }
};

/// a_n prod (z - z_i) with |z_i| uniform in [K, root_modulus_max], uniform
/// angles and unimodular a_n. Deterministic in (config.seed, trial).
Polynomial gen_zero_free(const GenConfig& config, std::uint64_t trial);

/// a_0 + sum_{j=mu}^n a_j z^j, drawn until the instance has no zeros in
/// |z| < K. Throws generator_exhausted after kLacunaryRejectionCap draws.
Polynomial gen_lacunary(const GenConfig& config, std::uint64_t trial);

/// Runs config.trials instances against the chosen properties. Trials are
/// split over `threads` workers (0 = hardware concurrency); the report is
/// identical to a sequential run apart from elapsed_seconds.
FuzzReport run_suite(const GenConfig& config, std::span<const Property> properties,
                     unsigned threads = 0);

struct ScanRow {
  double r = 0.0;
  double measured = 0.0;
  std::vector<BoundResult> bounds;
};

/// One row per radius: measured M(p, r) and every bound.
std::vector<ScanRow> sharpness_scan(const Polynomial& p, std::span<const double> r_grid,
                                    const BestBoundOptions& options = {});

}  // namespace circlebound
