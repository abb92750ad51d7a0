#include "circlebound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "circlebound/quadrature.hpp"
#include "circlebound/rootfind.hpp"

namespace circlebound {

const char* to_string(BoundId id) {
  switch (id) {
    case BoundId::varga: return "varga";
    case BoundId::rivlin: return "rivlin";
    case BoundId::govil_two_radius: return "govil_two_radius";
    case BoundId::thm21_statement: return "thm21_statement";
    case BoundId::thm21_proof: return "thm21_proof";
    case BoundId::thm22: return "thm22";
    case BoundId::thm23: return "thm23";
    case BoundId::cor24: return "cor24";
    case BoundId::cor25: return "cor25";
    case BoundId::cor26: return "cor26";
    case BoundId::qazi_simple: return "qazi_simple";
    case BoundId::qazi_integral: return "qazi_integral";
  }
  return "unknown";
}

std::optional<BoundId> bound_id_from_string(std::string_view name) {
  for (const BoundId id : kAllBounds) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

const BoundResult* BoundSummary::find(BoundId id) const {
  for (const auto& b : bounds) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

namespace {

constexpr double kQuadratureTolerance = 1e-12;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

class Hypotheses {
 public:
  explicit Hypotheses(const Polynomial& p) : p_(p) {}

  void require(bool ok, std::string reason) {
    if (!ok) reasons_.push_back(std::move(reason));
  }

  /// p != 0 in |z| < K, K > 0.
  void zero_free(double K) {
    if (!(K > 0.0) || !std::isfinite(K)) {
      reasons_.push_back("zero-free radius K must be positive, got " + num(K));
      return;
    }
    const ZeroFreeCertificate cert = certify_zero_free(p_, K);
    if (!cert.holds) {
      const std::string disk = K == 1.0 ? "unit disk" : "disk |z|<" + num(K);
      reasons_.push_back("zero inside " + disk + " (min root modulus " + num(cert.min_root_modulus) + ")");
    }
  }

  /// p = a_0 + sum_{j>=mu} a_j z^j with 1 <= mu < n.
  std::optional<LacunaryProfile> lacunary(MuOverride override_mu) {
    LacunaryProfile profile;
    try {
      profile = lacunary_profile(p_);
    } catch (const Error& e) {
      reasons_.push_back(std::string("not lacunary: ") + e.what());
      return std::nullopt;
    }
    if (override_mu) {
      if (*override_mu < 1 || *override_mu > profile.mu) {
        reasons_.push_back("mu override " + std::to_string(*override_mu) + " outside 1.." +
                           std::to_string(profile.mu));
        return std::nullopt;
      }
      profile.ratio = std::abs(p_[static_cast<std::size_t>(*override_mu)]) / std::abs(p_[0]);
      profile.mu = *override_mu;
    }
    if (profile.mu >= p_.degree()) {
      reasons_.push_back("gap index mu=" + std::to_string(profile.mu) + " must be below degree n=" +
                         std::to_string(p_.degree()));
      return std::nullopt;
    }
    return profile;
  }

  bool ok() const { return reasons_.empty(); }

  BoundResult reject(BoundId id, BoundParams params) && {
    BoundResult result;
    result.id = id;
    result.applicable = false;
    result.reasons = std::move(reasons_);
    result.params = std::move(params);
    return result;
  }

 private:
  const Polynomial& p_;
  std::vector<std::string> reasons_;
};

BoundResult accept(BoundId id, BoundParams params, double value) {
  BoundResult result;
  result.id = id;
  result.applicable = true;
  result.value = value;
  result.params = std::move(params);
  return result;
}

// factor * reference + improvement, with both parts recorded.
BoundResult accept_split(BoundId id, BoundParams params, double factor, double reference,
                         double improvement) {
  params.factor = factor;
  params.reference_max = reference;
  params.improvement = improvement;
  return accept(id, std::move(params), factor * reference + improvement);
}

BoundParams base_params(const Polynomial& p, double r) {
  BoundParams params;
  params.r = r;
  params.n = p.degree();
  return params;
}

// Value of the lacunary bound for a polynomial already normalised to the
// unit disk; no hypotheses are checked here.
BoundResult thm21_value(BoundId id, const Polynomial& p, double r, Thm21Variant variant,
                        const LacunaryProfile& profile, BoundParams params) {
  const int n = p.degree();
  const double M1 = max_modulus(p, 1.0).value;
  const double m1 = min_modulus(p, 1.0).value;
  const double factor = thm21_factor(n, profile.mu, r, variant);
  params.mu = profile.mu;
  params.ratio = profile.ratio;
  params.m = m1;
  return accept_split(id, std::move(params), factor, M1, factor * n * m1 * std::log(2.0 / (1.0 + r)));
}

}  // namespace

double thm21_factor(int n, int mu, double r, Thm21Variant variant) {
  const double e = static_cast<double>(n) / mu;
  const double lacunary_term = std::pow(1.0 + std::pow(r, mu), e);
  const double linear_term = std::pow(1.0 + r, e);
  const double numerator = variant == Thm21Variant::statement ? linear_term : lacunary_term;
  const double denominator = lacunary_term + mu * std::pow(2.0, e) - mu * linear_term;
  return numerator / denominator;
}

double qazi_simple_factor(int n, int mu, double r, double R) {
  return std::pow((1.0 + std::pow(r, mu)) / (1.0 + std::pow(R, mu)), static_cast<double>(n) / mu);
}

double qazi_integrand(int n, int mu, double ratio, double t) {
  const double c = static_cast<double>(mu) / n * ratio;
  const double t_mu = std::pow(t, mu);
  const double t_mu1 = std::pow(t, mu - 1);
  return (t_mu + c * t_mu1) / (t_mu * t + c * (t_mu + t) + 1.0);
}

double qazi_exponent_integral(int n, int mu, double ratio, double r, double R) {
  return adaptive_simpson([&](double t) { return qazi_integrand(n, mu, ratio, t); }, r, R,
                          kQuadratureTolerance);
}

BoundResult varga_bound(const Polynomial& p, double r) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  h.require(r > 0.0 && r <= 1.0, "requires 0 < r <= 1, got r=" + num(r));
  if (!h.ok()) return std::move(h).reject(BoundId::varga, params);
  const double M1 = max_modulus(p, 1.0).value;
  return accept_split(BoundId::varga, params, std::pow(r, p.degree()), M1, 0.0);
}

BoundResult rivlin_bound(const Polynomial& p, double r) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  h.require(r > 0.0 && r <= 1.0, "requires 0 < r <= 1, got r=" + num(r));
  h.zero_free(1.0);
  if (!h.ok()) return std::move(h).reject(BoundId::rivlin, params);
  const double M1 = max_modulus(p, 1.0).value;
  return accept_split(BoundId::rivlin, params, std::pow((1.0 + r) / 2.0, p.degree()), M1, 0.0);
}

BoundResult govil_two_radius_bound(const Polynomial& p, double r, double rho) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  params.R = rho;
  h.require(r > 0.0 && r <= rho && rho <= 1.0,
            "requires 0 < r <= rho <= 1, got r=" + num(r) + ", rho=" + num(rho));
  h.zero_free(1.0);
  if (!h.ok()) return std::move(h).reject(BoundId::govil_two_radius, params);
  const double Mrho = max_modulus(p, rho).value;
  return accept_split(BoundId::govil_two_radius, params,
                      std::pow((1.0 + r) / (1.0 + rho), p.degree()), Mrho, 0.0);
}

BoundResult thm21_bound(const Polynomial& p, double r, Thm21Variant variant, MuOverride mu) {
  const BoundId id = variant == Thm21Variant::statement ? BoundId::thm21_statement : BoundId::thm21_proof;
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  h.require(r > 0.0 && r < 1.0, "requires 0 < r < 1, got r=" + num(r));
  h.zero_free(1.0);
  const auto profile = h.lacunary(mu);
  if (!h.ok()) return std::move(h).reject(id, params);
  return thm21_value(id, p, r, variant, *profile, params);
}

BoundResult thm22_bound(const Polynomial& p, double r, double K, Thm21Variant variant, MuOverride mu) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  params.K = K;
  h.require(K > 0.0 && r > 0.0 && r < K, "requires 0 < r < K, got r=" + num(r) + ", K=" + num(K));
  h.zero_free(K);
  const auto profile = h.lacunary(mu);
  if (!h.ok()) return std::move(h).reject(BoundId::thm22, params);
  // p(Kz) has no zeros in the unit disk; apply the unit-disk bound at r/K.
  BoundResult result =
      thm21_value(BoundId::thm22, scale_argument(p, K), r / K, variant, *profile, params);
  result.params.r = r;
  return result;
}

BoundResult thm23_bound(const Polynomial& p, double r, double R, double K) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  params.R = R;
  params.K = K;
  h.require(r > 0.0 && r <= R && R <= 1.0 && 1.0 <= K,
            "requires 0 < r <= R <= 1 <= K, got r=" + num(r) + ", R=" + num(R) + ", K=" + num(K));
  if (K > 0.0) h.zero_free(K);
  if (!h.ok()) return std::move(h).reject(BoundId::thm23, params);
  const int n = p.degree();
  const double MR = max_modulus(p, R).value;
  const double mK = min_modulus(p, K).value;
  const double lower = std::pow(1.0 + r, n);
  const double factor = lower / (lower + std::pow(R + K, n) - std::pow(r + K, n));
  params.m = mK;
  return accept_split(BoundId::thm23, params, factor, MR,
                      factor * n * mK * std::log((R + K) / (r + K)));
}

BoundResult cor24_bound(const Polynomial& p, double r, double R) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  params.R = R;
  h.require(r > 0.0 && r <= R && R <= 1.0, "requires 0 < r <= R <= 1, got r=" + num(r) + ", R=" + num(R));
  h.zero_free(1.0);
  if (!h.ok()) return std::move(h).reject(BoundId::cor24, params);
  const int n = p.degree();
  const double MR = max_modulus(p, R).value;
  const double m1 = min_modulus(p, 1.0).value;
  const double factor = std::pow((1.0 + r) / (1.0 + R), n);
  params.m = m1;
  return accept_split(BoundId::cor24, params, factor, MR,
                      factor * n * m1 * std::log((1.0 + R) / (1.0 + r)));
}

BoundResult cor25_bound(const Polynomial& p, double r, double K) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  params.K = K;
  h.require(r > 0.0 && r < 1.0 && K >= 1.0,
            "requires 0 < r < 1 <= K, got r=" + num(r) + ", K=" + num(K));
  if (K > 0.0) h.zero_free(K);
  if (!h.ok()) return std::move(h).reject(BoundId::cor25, params);
  const int n = p.degree();
  const double M1 = max_modulus(p, 1.0).value;
  const double mK = min_modulus(p, K).value;
  const double lower = std::pow(1.0 + r, n);
  const double factor = lower / (lower + std::pow(1.0 + K, n) - std::pow(r + K, n));
  params.m = mK;
  return accept_split(BoundId::cor25, params, factor, M1,
                      factor * n * mK * std::log((1.0 + K) / (r + K)));
}

BoundResult cor26_bound(const Polynomial& p, double r) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  h.require(r > 0.0 && r < 1.0, "requires 0 < r < 1, got r=" + num(r));
  h.zero_free(1.0);
  if (!h.ok()) return std::move(h).reject(BoundId::cor26, params);
  const int n = p.degree();
  const double M1 = max_modulus(p, 1.0).value;
  const double m1 = min_modulus(p, 1.0).value;
  const double factor = std::pow((1.0 + r) / 2.0, n);
  params.m = m1;
  return accept_split(BoundId::cor26, params, factor, M1,
                      factor * n * m1 * std::log(2.0 / (1.0 + r)));
}

BoundResult qazi_simple_bound(const Polynomial& p, double r, double R, MuOverride mu) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  params.R = R;
  h.require(r > 0.0 && r <= R && R <= 1.0, "requires 0 < r <= R <= 1, got r=" + num(r) + ", R=" + num(R));
  h.zero_free(1.0);
  const auto profile = h.lacunary(mu);
  if (!h.ok()) return std::move(h).reject(BoundId::qazi_simple, params);
  params.mu = profile->mu;
  params.ratio = profile->ratio;
  const double MR = max_modulus(p, R).value;
  return accept_split(BoundId::qazi_simple, params, qazi_simple_factor(p.degree(), profile->mu, r, R),
                      MR, 0.0);
}

BoundResult qazi_integral_bound(const Polynomial& p, double r, double R, MuOverride mu) {
  Hypotheses h(p);
  BoundParams params = base_params(p, r);
  params.R = R;
  h.require(r > 0.0 && r <= R && R <= 1.0, "requires 0 < r <= R <= 1, got r=" + num(r) + ", R=" + num(R));
  h.zero_free(1.0);
  const auto profile = h.lacunary(mu);
  if (!h.ok()) return std::move(h).reject(BoundId::qazi_integral, params);
  const int n = p.degree();
  params.mu = profile->mu;
  params.ratio = profile->ratio;
  const double integral = qazi_exponent_integral(n, profile->mu, profile->ratio, r, R);
  params.integral = integral;
  const double MR = max_modulus(p, R).value;
  return accept_split(BoundId::qazi_integral, params, std::exp(-n * integral), MR, 0.0);
}

double derivative_upper_bound(const Polynomial& p, double K) {
  if (!(K >= 1.0) || !std::isfinite(K)) {
    throw Error(ErrorKind::invalid_parameter, "derivative bound requires K >= 1, got " + num(K));
  }
  const ZeroFreeCertificate cert = certify_zero_free(p, K);
  if (!cert.holds) {
    throw Error(ErrorKind::invalid_parameter,
                "derivative bound requires no zeros in |z|<" + num(K) + " (min root modulus " +
                    num(cert.min_root_modulus) + ")");
  }
  const double M1 = max_modulus(p, 1.0).value;
  const double mK = min_modulus(p, K).value;
  return p.degree() / (1.0 + K) * (M1 - mK);
}

BoundSummary best_lower_bound(const Polynomial& p, double r, const BestBoundOptions& options) {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorKind::invalid_parameter, "best_lower_bound requires 0 < r < 1, got r=" + num(r));
  }
  const double R = options.R.value_or(1.0);
  double K = 1.0;
  if (options.K) {
    K = *options.K;
  } else {
    const ZeroFreeCertificate unit = certify_zero_free(p, 1.0);
    if (!unit.holds) K = unit.min_root_modulus;
  }

  BoundSummary summary;
  for (const BoundId id : kAllBounds) {
    switch (id) {
      case BoundId::varga: summary.bounds.push_back(varga_bound(p, r)); break;
      case BoundId::rivlin: summary.bounds.push_back(rivlin_bound(p, r)); break;
      case BoundId::govil_two_radius: summary.bounds.push_back(govil_two_radius_bound(p, r, R)); break;
      case BoundId::thm21_statement:
        summary.bounds.push_back(thm21_bound(p, r, Thm21Variant::statement, options.mu));
        break;
      case BoundId::thm21_proof:
        summary.bounds.push_back(thm21_bound(p, r, Thm21Variant::proof, options.mu));
        break;
      case BoundId::thm22:
        summary.bounds.push_back(thm22_bound(p, r, K, Thm21Variant::proof, options.mu));
        break;
      case BoundId::thm23: summary.bounds.push_back(thm23_bound(p, r, R, K)); break;
      case BoundId::cor24: summary.bounds.push_back(cor24_bound(p, r, R)); break;
      case BoundId::cor25: summary.bounds.push_back(cor25_bound(p, r, K)); break;
      case BoundId::cor26: summary.bounds.push_back(cor26_bound(p, r)); break;
      case BoundId::qazi_simple: summary.bounds.push_back(qazi_simple_bound(p, r, R, options.mu)); break;
      case BoundId::qazi_integral: summary.bounds.push_back(qazi_integral_bound(p, r, R, options.mu)); break;
    }
  }

  const BoundResult* best = nullptr;
  for (const auto& b : summary.bounds) {
    if (!b.applicable || b.id == BoundId::thm21_statement) continue;
    if (best == nullptr || *b.value > *best->value) best = &b;
  }
  if (best != nullptr) summary.best = best->id;

  if (options.measure) {
    summary.measured = max_modulus(p, r);
    if (best != nullptr) summary.gap = summary.measured->value - *best->value;
  }
  return summary;
}

}  // namespace circlebound
