#include "circlebound/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "circlebound/circle_extrema.hpp"
#include "circlebound/rootfind.hpp"

namespace circlebound {

const char* to_string(Property property) {
  switch (property) {
    case Property::upper_bound: return "upper_bound";
    case Property::ordering_rivlin: return "ordering_rivlin";
    case Property::ordering_two_radius: return "ordering_two_radius";
    case Property::reductions: return "reductions";
    case Property::equality: return "equality";
    case Property::derivative_bound: return "derivative_bound";
    case Property::bernstein: return "bernstein";
    case Property::qazi_refinement: return "qazi_refinement";
    case Property::thm21_variant_order: return "thm21_variant_order";
    case Property::oracle_agreement: return "oracle_agreement";
    case Property::radius_monotonicity: return "radius_monotonicity";
    case Property::generator_soundness: return "generator_soundness";
  }
  return "unknown";
}

std::optional<Property> property_from_string(std::string_view name) {
  for (const Property p : kAllProperties) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

void GenConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::invalid_parameter, what); };
  if (trials < 1) fail("trials must be >= 1");
  if (degree_min < 2) fail("degree_min must be >= 2");
  if (degree_max < degree_min) fail("degree_max must be >= degree_min");
  if (degree_max > kMaxFuzzDegree) fail("degree_max must be <= " + std::to_string(kMaxFuzzDegree));
  if (!(K >= 1.0) || !std::isfinite(K)) fail("K must be >= 1");
  if (!(root_modulus_max > K) || !std::isfinite(root_modulus_max)) fail("root_modulus_max must exceed K");
  if (mu && (*mu < 1 || *mu >= degree_max)) fail("mu must satisfy 1 <= mu < degree_max");
  if (alpha_beta) {
    const double tol = 1e-12;
    if (std::abs(std::abs(alpha_beta->first) - 1.0) > tol ||
        std::abs(std::abs(alpha_beta->second) - 1.0) > tol) {
      fail("alpha and beta must be unimodular");
    }
  }
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kViolationRelTol = 1e-9;
constexpr double kViolationAbsTol = 1e-12;
constexpr double kIdentityRelTol = 1e-12;
constexpr double kEqualityRelTol = 1e-10;
constexpr double kMonotoneRelTol = 1e-12;
constexpr double kRadiusMin = 0.02;
constexpr double kRadiusMax = 0.98;
constexpr double kBernsteinRadiusMax = 3.0;
constexpr std::size_t kOracleSamples = 1u << 14;

constexpr std::uint64_t kGeneratorStream = 0x6a09e667f3bcc909ULL;
constexpr std::uint64_t kSamplingStream = 0xbb67ae8584caa73bULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 output is fixed by the standard; the distributions are not,
// so the conversions to double and to integer ranges are done here.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream)
      : engine_(splitmix64(splitmix64(seed ^ stream) + trial)) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Complex unimodular() { return std::polar(1.0, uniform(0.0, kTwoPi)); }
  Complex in_disk(double rmin, double rmax) {
    return std::polar(uniform(rmin, rmax), uniform(0.0, kTwoPi));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

Polynomial gen_zero_free(const GenConfig& config, std::uint64_t trial) {
  config.validate();
  Rng rng(config.seed, trial, kGeneratorStream);
  const int n = rng.integer(config.degree_min, config.degree_max);
  std::vector<Complex> roots;
  roots.reserve(n);
  if (config.real_coefficients) {
    while (static_cast<int>(roots.size()) + 2 <= n) {
      const Complex z = std::polar(rng.uniform(config.K, config.root_modulus_max), rng.uniform(0.0, kTwoPi));
      roots.push_back(z);
      roots.push_back(std::conj(z));
    }
    if (static_cast<int>(roots.size()) < n) {
      const double modulus = rng.uniform(config.K, config.root_modulus_max);
      roots.emplace_back(rng.uniform() < 0.5 ? -modulus : modulus, 0.0);
    }
    const Complex lead = rng.uniform() < 0.5 ? -1.0 : 1.0;
    Polynomial p = from_roots(lead, roots);
    std::vector<Complex> c(p.coefficients().begin(), p.coefficients().end());
    for (auto& a : c) a = a.real();  // drop rounding residue in the imaginary parts
    return Polynomial(std::move(c));
  }
  for (int i = 0; i < n; ++i) {
    roots.push_back(std::polar(rng.uniform(config.K, config.root_modulus_max), rng.uniform(0.0, kTwoPi)));
  }
  return from_roots(rng.unimodular(), roots);
}

Polynomial gen_lacunary(const GenConfig& config, std::uint64_t trial) {
  config.validate();
  if (!config.mu) throw Error(ErrorKind::invalid_parameter, "lacunary generator needs mu");
  const int mu = *config.mu;
  Rng rng(config.seed, trial, kGeneratorStream);
  const int n = rng.integer(std::max(config.degree_min, mu + 1), config.degree_max);
  for (int attempt = 0; attempt < kLacunaryRejectionCap; ++attempt) {
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(0.0));
    double weighted = 0.0;
    for (int j = mu; j <= n; ++j) {
      const double rmin = (j == mu || j == n) ? 0.1 : 0.0;
      Complex a = rng.in_disk(rmin, 1.0);
      if (config.real_coefficients) a = rng.uniform() < 0.5 ? -std::abs(a) : std::abs(a);
      c[static_cast<std::size_t>(j)] = a;
      weighted += std::abs(a) * std::pow(config.K, j);
    }
    // |a_0| relative to sum |a_j| K^j: above 1 is zero-free by Rouche, below
    // 1 is accepted only when the roots say so.
    const double size = weighted * rng.uniform(0.3, 1.5);
    c[0] = config.real_coefficients ? Complex(rng.uniform() < 0.5 ? -size : size) : size * rng.unimodular();
    Polynomial p(std::move(c));
    if (certify_zero_free(p, config.K).holds) return p;
  }
  throw Error(ErrorKind::generator_exhausted,
              "lacunary generator exhausted " + std::to_string(kLacunaryRejectionCap) + " draws");
}

namespace {

struct TrialOutcome {
  std::map<std::string, std::uint64_t> checked;
  std::vector<Violation> violations;
  std::vector<Violation> findings;
  std::vector<Incident> incidents;
};

class TrialChecker {
 public:
  TrialChecker(std::uint64_t trial, const Polynomial& p, std::map<std::string, double> parameters,
               TrialOutcome& out)
      : trial_(trial), p_(p), parameters_(std::move(parameters)), out_(out) {}

  /// Records a violation when lhs > rhs (1 + rel) + kViolationAbsTol.
  void at_most(Property property, std::string check, double lhs, double rhs,
               double rel = kViolationRelTol) {
    ++out_.checked[to_string(property)];
    if (lhs > rhs * (1.0 + rel) + kViolationAbsTol || std::isnan(lhs) || std::isnan(rhs)) {
      out_.violations.push_back(make(to_string(property), std::move(check), lhs, rhs, lhs - rhs));
    }
  }

  /// Records a violation when |a - b| > rel max(|a|, |b|).
  void close(Property property, std::string check, double a, double b, double rel) {
    ++out_.checked[to_string(property)];
    const double diff = std::abs(a - b);
    if (!(diff <= rel * std::max(std::abs(a), std::abs(b)))) {
      out_.violations.push_back(make(to_string(property), std::move(check), a, b, diff));
    }
  }

  void finding(std::string check, double bound, double measured) {
    ++out_.checked["statement_variant"];
    if (bound > measured * (1.0 + kViolationRelTol) + kViolationAbsTol) {
      out_.findings.push_back(make("statement_variant", std::move(check), bound, measured, bound - measured));
    }
  }

  const Polynomial& poly() const { return p_; }

  /// Checks against a different instance than the trial's own.
  TrialChecker with(const Polynomial& other) const { return TrialChecker(trial_, other, parameters_, out_); }

 private:
  Violation make(std::string property, std::string check, double bound, double measured,
                 double deficit) const {
    Violation v;
    v.trial = trial_;
    v.property = std::move(property);
    v.check = std::move(check);
    v.coefficients.assign(p_.coefficients().begin(), p_.coefficients().end());
    v.parameters = parameters_;
    v.bound = bound;
    v.measured = measured;
    v.deficit = deficit;
    return v;
  }

  std::uint64_t trial_;
  const Polynomial& p_;
  std::map<std::string, double> parameters_;
  TrialOutcome& out_;
};

double value_of(const BoundResult& b) { return b.value.value_or(std::nan("")); }

void check_equality_family(TrialChecker& checker, const std::string& family, double r, double R) {
  const Polynomial& q = checker.poly();
  const double measured = max_modulus(q, r).value;
  const BoundResult results[] = {
      rivlin_bound(q, r),
      cor26_bound(q, r),
      cor24_bound(q, r, R),
      govil_two_radius_bound(q, r, R),
      thm21_bound(q, r, Thm21Variant::statement),
      thm21_bound(q, r, Thm21Variant::proof),
  };
  for (const auto& b : results) {
    checker.close(Property::equality, family + ":" + to_string(b.id), value_of(b), measured,
                  kEqualityRelTol);
  }
}

void run_trial(const GenConfig& config, std::span<const Property> properties, std::uint64_t trial,
               TrialOutcome& out) {
  auto wants = [&](Property p) {
    return std::find(properties.begin(), properties.end(), p) != properties.end();
  };
  try {
    const Polynomial p = config.mu ? gen_lacunary(config, trial) : gen_zero_free(config, trial);
    const int n = p.degree();
    const double K = config.K;

    Rng rng(config.seed, trial, kSamplingStream);
    const double r = rng.uniform(kRadiusMin, kRadiusMax);
    const double R = r + (1.0 - r) * (1.0 - rng.uniform());  // (r, 1]
    const double R_outer = rng.uniform(1.0, kBernsteinRadiusMax);
    TrialChecker check(trial, p, {{"r", r}, {"R", R}, {"R_outer", R_outer}, {"K", K}}, out);

    if (wants(Property::generator_soundness)) {
      const ZeroFreeCertificate cert = certify_zero_free(p, K);
      check.at_most(Property::generator_soundness, "zero_free", cert.holds ? 0.0 : 1.0, 0.0);
      if (config.mu) {
        const LacunaryProfile profile = lacunary_profile(p);
        check.at_most(Property::generator_soundness, "lacunary_mu", *config.mu, profile.mu, 0.0);
      }
    }

    const double M_r = max_modulus(p, r).value;
    const double M_R = max_modulus(p, R).value;

    const bool needs_bounds = wants(Property::upper_bound) || wants(Property::ordering_rivlin) ||
                              wants(Property::ordering_two_radius) || wants(Property::reductions) ||
                              wants(Property::qazi_refinement) || wants(Property::thm21_variant_order);
    if (needs_bounds) {
      const BoundResult varga = varga_bound(p, r);
      const BoundResult rivlin = rivlin_bound(p, r);
      const BoundResult govil = govil_two_radius_bound(p, r, R);
      const BoundResult t21s = thm21_bound(p, r, Thm21Variant::statement);
      const BoundResult t21p = thm21_bound(p, r, Thm21Variant::proof);
      const BoundResult t22 = thm22_bound(p, r, K);
      const BoundResult t22s = thm22_bound(p, r, K, Thm21Variant::statement);
      const BoundResult t23 = thm23_bound(p, r, R, K);
      const BoundResult c24 = cor24_bound(p, r, R);
      const BoundResult c25 = cor25_bound(p, r, K);
      const BoundResult c26 = cor26_bound(p, r);
      const BoundResult qs = qazi_simple_bound(p, r, R);
      const BoundResult qi = qazi_integral_bound(p, r, R);

      if (wants(Property::upper_bound)) {
        for (const BoundResult* b : {&varga, &rivlin, &govil, &t21p, &t22, &t23, &c24, &c25, &c26, &qs, &qi}) {
          if (b->applicable) check.at_most(Property::upper_bound, to_string(b->id), *b->value, M_r);
        }
        if (t21s.applicable) check.finding("thm21_statement", *t21s.value, M_r);
        if (t22s.applicable) check.finding("thm22_statement", *t22s.value, M_r);
      }
      if (wants(Property::ordering_rivlin)) {
        check.at_most(Property::ordering_rivlin, "rivlin<=cor26", value_of(rivlin), value_of(c26));
        check.at_most(Property::ordering_rivlin, "varga<=rivlin", value_of(varga), value_of(rivlin));
      }
      if (wants(Property::ordering_two_radius) && R > r) {
        check.at_most(Property::ordering_two_radius, "govil<=cor24", value_of(govil), value_of(c24));
      }
      if (wants(Property::reductions)) {
        check.close(Property::reductions, "thm23(K=1)=cor24", value_of(thm23_bound(p, r, R, 1.0)),
                    value_of(c24), kIdentityRelTol);
        check.close(Property::reductions, "cor25(K=1)=cor26", value_of(cor25_bound(p, r, 1.0)),
                    value_of(c26), kIdentityRelTol);
        if (t21p.applicable) {
          check.close(Property::reductions, "thm22(K=1)=thm21", value_of(thm22_bound(p, r, 1.0)),
                      value_of(t21p), kIdentityRelTol);
        }
      }
      if (wants(Property::qazi_refinement) && qs.applicable) {
        check.at_most(Property::qazi_refinement, "simple<=integral", *qs.value, value_of(qi));
      }
      if (wants(Property::thm21_variant_order) && t21p.applicable && *t21p.params.mu > 1) {
        check.at_most(Property::thm21_variant_order, "proof<=statement", *t21p.value, value_of(t21s));
      }
    }

    if (wants(Property::equality)) {
      std::vector<Complex> binomial(static_cast<std::size_t>(n) + 1);
      double c = 1.0;
      for (int j = 0; j <= n; ++j) {
        binomial[static_cast<std::size_t>(j)] = c;
        c = c * (n - j) / (j + 1);
      }
      const Polynomial one_plus_z(std::move(binomial));
      auto family = check.with(one_plus_z);
      check_equality_family(family, "(1+z)^n", r, R);
      if (config.alpha_beta) {
        const auto [alpha, beta] = *config.alpha_beta;
        const std::vector<Complex> halves(static_cast<std::size_t>(n), -alpha / beta);
        const Polynomial extremal = from_roots(std::pow(beta / 2.0, n), halves);
        auto ab = check.with(extremal);
        check_equality_family(ab, "((a+bz)/2)^n", r, R);
      }
    }

    const bool needs_derivative = wants(Property::derivative_bound) || wants(Property::bernstein);
    if (needs_derivative) {
      const double M1 = max_modulus(p, 1.0).value;
      const double Md = max_modulus(derivative(p), 1.0).value;
      if (wants(Property::derivative_bound)) {
        check.at_most(Property::derivative_bound, "max|p'|<=bound", Md, derivative_upper_bound(p, K));
      }
      if (wants(Property::bernstein)) {
        const double M_outer = max_modulus(p, R_outer).value;
        const double grow = std::pow(R_outer, n);
        check.at_most(Property::bernstein, "M(p',1)<=n|p|", Md, n * M1);
        check.at_most(Property::bernstein, "M(p,R)<=R^n|p|", M_outer, grow * M1);
        // K >= 1, so p has no zeros in the unit disk.
        check.at_most(Property::bernstein, "M(p',1)<=n/2|p|", Md, 0.5 * n * M1);
        check.at_most(Property::bernstein, "M(p,R)<=(R^n+1)/2|p|", M_outer, 0.5 * (grow + 1.0) * M1);
      }
    }

    if (wants(Property::oracle_agreement)) {
      const double grid_max = grid_oracle(p, r, ExtremumKind::maximum, kOracleSamples);
      const double half_step = std::numbers::pi / static_cast<double>(kOracleSamples);
      // A trigonometric polynomial g = |p|^2 of degree n satisfies |g''| <= n^2 max g,
      // so the best grid sample is within a factor 1 - n^2 h^2 / 2 of the maximum.
      const double slack = 1.0 - 0.5 * n * n * half_step * half_step;
      check.at_most(Property::oracle_agreement, "grid_max<=max", grid_max, M_r, kMonotoneRelTol);
      check.at_most(Property::oracle_agreement, "max<=grid_max/slack", M_r, grid_max / slack, kMonotoneRelTol);
      const double grid_min = grid_oracle(p, 1.0, ExtremumKind::minimum, kOracleSamples);
      check.at_most(Property::oracle_agreement, "min<=grid_min", min_modulus(p, 1.0).value, grid_min,
                    kMonotoneRelTol);
    }

    if (wants(Property::radius_monotonicity)) {
      check.at_most(Property::radius_monotonicity, "M(p,r)<=M(p,R)", M_r, M_R, kMonotoneRelTol);
    }
  } catch (const Error& e) {
    out.incidents.push_back(Incident{trial, to_string(e.kind()), e.what()});
  }
}

}  // namespace

FuzzReport run_suite(const GenConfig& config, std::span<const Property> properties, unsigned threads) {
  config.validate();
  if (properties.empty()) throw Error(ErrorKind::invalid_parameter, "no properties selected");
  const auto start = std::chrono::steady_clock::now();

  const auto trials = static_cast<std::size_t>(config.trials);
  std::vector<TrialOutcome> outcomes(trials);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) run_trial(config, properties, t, outcomes[t]);
  };
  if (threads <= 1) {
    work(0, trials);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (trials + threads - 1) / threads;
    for (std::size_t begin = 0; begin < trials; begin += chunk) {
      pool.emplace_back(work, begin, std::min(trials, begin + chunk));
    }
  }

  FuzzReport report;
  report.config = config;
  for (const Property p : properties) report.properties.emplace_back(to_string(p));
  for (auto& o : outcomes) {
    for (const auto& [key, count] : o.checked) report.checked[key] += count;
    std::move(o.violations.begin(), o.violations.end(), std::back_inserter(report.violations));
    std::move(o.findings.begin(), o.findings.end(), std::back_inserter(report.findings));
    std::move(o.incidents.begin(), o.incidents.end(), std::back_inserter(report.incidents));
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ScanRow> sharpness_scan(const Polynomial& p, std::span<const double> r_grid,
                                    const BestBoundOptions& options) {
  std::vector<ScanRow> rows;
  rows.reserve(r_grid.size());
  for (const double r : r_grid) {
    BestBoundOptions opts = options;
    opts.measure = true;
    BoundSummary summary = best_lower_bound(p, r, opts);
    rows.push_back(ScanRow{r, summary.measured->value, std::move(summary.bounds)});
  }
  return rows;
}

}  // namespace circlebound
