#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circlebound/circle_extrema.hpp"
#include "circlebound/polynomial.hpp"

namespace circlebound {

/// Lower bounds for M(p, r) = max_{|z|=r} |p(z)|.
///
///   varga             r^n M(p,1)                              any p, 0<r<=1
///   rivlin            ((1+r)/2)^n M(p,1)                      zero-free |z|<1
///   govil_two_radius  ((1+r)/(1+R))^n M(p,R)                  zero-free |z|<1, r<=R<=1
///   thm21_*           lacunary sharpening of rivlin           zero-free |z|<1, 1<=mu<n
///   thm22             thm21 applied to p(Kz) at r/K           zero-free |z|<K, r<K
///   thm23             two-radius K-disk bound                 zero-free |z|<K, r<=R<=1<=K
///   cor24             thm23 with K=1
///   cor25             thm23 with R=1
///   cor26             thm23 with K=R=1
///   qazi_simple       ((1+r^mu)/(1+R^mu))^(n/mu) M(p,R)
///   qazi_integral     exp(-n int_r^R g) M(p,R)
///
/// Every evaluator checks its hypotheses and reports applicable=false with
/// reasons instead of throwing. Reference values M and m are always
/// recomputed with circle_extrema.
enum class BoundId {
  varga,
  rivlin,
  govil_two_radius,
  thm21_statement,
  thm21_proof,
  thm22,
  thm23,
  cor24,
  cor25,
  cor26,
  qazi_simple,
  qazi_integral,
};

inline constexpr std::array<BoundId, 12> kAllBounds = {
    BoundId::varga,       BoundId::rivlin, BoundId::govil_two_radius, BoundId::thm21_statement,
    BoundId::thm21_proof, BoundId::thm22,  BoundId::thm23,            BoundId::cor24,
    BoundId::cor25,       BoundId::cor26,  BoundId::qazi_simple,      BoundId::qazi_integral,
};

const char* to_string(BoundId id);
std::optional<BoundId> bound_id_from_string(std::string_view name);

/// Which numerator to use for the lacunary theorem. The stated inequality
/// has (1+r)^{n/mu}; the closing line of its derivation has the weaker
/// (1+r^mu)^{n/mu}. They coincide for mu = 1.
enum class Thm21Variant { statement, proof };

/// Inputs a bound used. R doubles as the second radius rho of the two-radius
/// bound. factor multiplies reference_max; improvement is the additive
/// logarithmic term, so value = factor * reference_max + improvement.
struct BoundParams {
  double r = 0.0;
  std::optional<double> R;
  std::optional<double> K;
  std::optional<int> n;
  std::optional<int> mu;
  std::optional<double> ratio;
  std::optional<double> m;
  std::optional<double> reference_max;
  std::optional<double> factor;
  std::optional<double> improvement;
  std::optional<double> integral;

  friend bool operator==(const BoundParams&, const BoundParams&) = default;
};

struct BoundResult {
  BoundId id = BoundId::varga;
  bool applicable = false;
  std::optional<double> value;  // set iff applicable
  std::vector<std::string> reasons;
  BoundParams params;

  friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

struct BoundSummary {
  std::vector<BoundResult> bounds;
  std::optional<BoundId> best;
  std::optional<CircleExtremum> measured;
  std::optional<double> gap;

  const BoundResult* find(BoundId id) const;
};

/// Forces the gap index used by the lacunary bounds. Must satisfy
/// 1 <= mu <= detected mu, so the lacunary form is still exact.
using MuOverride = std::optional<int>;

BoundResult varga_bound(const Polynomial& p, double r);
BoundResult rivlin_bound(const Polynomial& p, double r);
BoundResult govil_two_radius_bound(const Polynomial& p, double r, double rho);
BoundResult thm21_bound(const Polynomial& p, double r, Thm21Variant variant = Thm21Variant::proof,
                        MuOverride mu = std::nullopt);
BoundResult thm22_bound(const Polynomial& p, double r, double K,
                        Thm21Variant variant = Thm21Variant::proof, MuOverride mu = std::nullopt);
BoundResult thm23_bound(const Polynomial& p, double r, double R, double K);
BoundResult cor24_bound(const Polynomial& p, double r, double R);
BoundResult cor25_bound(const Polynomial& p, double r, double K);
BoundResult cor26_bound(const Polynomial& p, double r);
BoundResult qazi_simple_bound(const Polynomial& p, double r, double R, MuOverride mu = std::nullopt);
BoundResult qazi_integral_bound(const Polynomial& p, double r, double R, MuOverride mu = std::nullopt);

/// n/(1+K) (M(p,1) - min_{|z|=K}|p|), an upper bound for max_{|z|=1}|p'|
/// when p has no zeros in |z| < K, K >= 1. Throws invalid_parameter when the
/// hypothesis fails.
double derivative_upper_bound(const Polynomial& p, double K);

struct BestBoundOptions {
  std::optional<double> R;  // defaults to 1
  std::optional<double> K;  // defaults to 1, or to the root-certified radius when p vanishes in |z|<1
  MuOverride mu;
  bool measure = true;
};

/// Evaluates every bound in kAllBounds order and picks the largest
/// applicable value. thm21_statement is reported but never chosen as best.
/// Throws invalid_parameter unless 0 < r < 1.
BoundSummary best_lower_bound(const Polynomial& p, double r, const BestBoundOptions& options = {});

// Closed-form pieces, exposed for tests and reporting.

/// (1+r)^{n/mu} or (1+r^mu)^{n/mu}, over (1+r^mu)^{n/mu} + mu 2^{n/mu} - mu (1+r)^{n/mu}.
double thm21_factor(int n, int mu, double r, Thm21Variant variant);
double qazi_simple_factor(int n, int mu, double r, double R);
/// (t^mu + c t^{mu-1}) / (t^{mu+1} + c (t^mu + t) + 1) with c = (mu/n) ratio.
double qazi_integrand(int n, int mu, double ratio, double t);
/// int_r^R qazi_integrand dt by adaptive Simpson, absolute tolerance 1e-12.
double qazi_exponent_integral(int n, int mu, double ratio, double r, double R);

}  // namespace circlebound
