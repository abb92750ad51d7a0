#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "circlebound/bounds.hpp"
#include "circlebound/circle_extrema.hpp"
#include "circlebound/rootfind.hpp"
#include "test_support.hpp"

using namespace circlebound;

namespace {

const Polynomial kCubic{64.0, 0.0, 0.0, 1.0};         // z^3 + 64, mu = n = 3
const Polynomial kGapped{64.0, 0.0, 1.0, 1.0};        // 64 + z^2 + z^3, mu = 2 < n
constexpr std::size_t kGrid = 1 << 20;

double grid_max(const Polynomial& p, double r) { return test::brute_extremum(p, r, true, kGrid); }
double grid_min(const Polynomial& p, double r) { return test::brute_extremum(p, r, false, kGrid); }

bool mentions(const BoundResult& b, const std::string& text) {
  for (const auto& reason : b.reasons) {
    if (reason.find(text) != std::string::npos) return true;
  }
  return false;
}

Polynomial extremal_rivlin(Complex alpha, Complex beta, int n) {
  const std::vector<Complex> roots(static_cast<std::size_t>(n), -alpha / beta);
  return from_roots(std::pow(beta / 2.0, n), roots);
}

// Random polynomial with every root outside |z| < K.
Polynomial zero_free(std::mt19937_64& rng, int n, double K) {
  std::uniform_real_distribution<double> modulus(K, 6.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> roots;
  for (int i = 0; i < n; ++i) roots.push_back(std::polar(modulus(rng), angle(rng)));
  return from_roots(std::polar(1.0, angle(rng)), roots);
}

}  // namespace

TEST_CASE("varga") {
  const Complex alpha = std::polar(1.3, 0.7);
  for (int n = 1; n <= 6; ++n) {
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, 0.0);
    c.back() = alpha;
    const Polynomial monomial(c);
    const BoundResult b = varga_bound(monomial, 0.4);
    REQUIRE(b.applicable);
    CHECK(*b.value == doctest::Approx(max_modulus(monomial, 0.4).value).epsilon(1e-12));
  }
  // M(z^3+64, 1) = 65 from the grid oracle.
  CHECK(grid_max(kCubic, 1.0) == doctest::Approx(65.0).epsilon(1e-15));
  CHECK(*varga_bound(kCubic, 0.1).value == doctest::Approx(0.065).epsilon(1e-12));
  CHECK(*varga_bound(kCubic, 1.0).value == doctest::Approx(65.0).epsilon(1e-13));
  CHECK_FALSE(varga_bound(kCubic, 1.5).applicable);
  CHECK_FALSE(varga_bound(kCubic, 0.0).applicable);
  CHECK_FALSE(varga_bound(kCubic, 0.0).value.has_value());
}

TEST_CASE("rivlin") {
  const BoundResult b = rivlin_bound(kCubic, 0.1);
  REQUIRE(b.applicable);
  CHECK(*b.params.factor == doctest::Approx(0.166375).epsilon(1e-14));
  CHECK(std::abs(*b.params.factor - 0.166375) <= 1e-6);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int n : {1, 2, 4, 7}) {
    const Polynomial p = extremal_rivlin(std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)), n);
    for (double r : {0.1, 0.6, 1.0}) {
      CHECK(*rivlin_bound(p, r).value == doctest::Approx(max_modulus(p, r).value).epsilon(1e-10));
    }
    CHECK(*rivlin_bound(test::one_plus_z(n), 0.3).value == doctest::Approx(std::pow(1.3, n)).epsilon(1e-12));
  }

  const BoundResult inside = rivlin_bound(Polynomial({0.0, 0.0, 2.0}), 0.5);
  CHECK_FALSE(inside.applicable);
  CHECK(mentions(inside, "zero inside unit disk"));
}

TEST_CASE("govil two-radius") {
  const BoundResult b = govil_two_radius_bound(kCubic, 0.1, 0.5);
  REQUIRE(b.applicable);
  CHECK(std::abs(*b.params.factor - 0.3943704) <= 5e-8);
  CHECK(*b.params.factor == doctest::Approx(std::pow(1.1 / 1.5, 3)).epsilon(1e-15));

  const BoundResult same = govil_two_radius_bound(kCubic, 0.5, 0.5);
  CHECK(*same.value == doctest::Approx(max_modulus(kCubic, 0.5).value).epsilon(1e-15));

  // ((1+z)/(1+rho))^n attains the bound.
  for (double rho : {0.3, 0.8}) {
    const int n = 5;
    const Polynomial p = from_roots(std::pow(1.0 / (1.0 + rho), n), std::vector<Complex>(n, -1.0));
    CHECK(*govil_two_radius_bound(p, 0.2, rho).value == doctest::Approx(max_modulus(p, 0.2).value).epsilon(1e-10));
  }
  CHECK_FALSE(govil_two_radius_bound(kCubic, 0.6, 0.5).applicable);
  CHECK_FALSE(govil_two_radius_bound(kCubic, 0.1, 1.2).applicable);
}

TEST_CASE("thm21 closed form and variants") {
  SUBCASE("(1+z)^n attains both variants") {
    for (int n : {2, 3, 6}) {
      for (double r : {0.1, 0.5, 0.9}) {
        const double expected = std::pow(1.0 + r, n);
        CHECK(*thm21_bound(test::one_plus_z(n), r, Thm21Variant::statement).value == doctest::Approx(expected).epsilon(1e-10));
        CHECK(*thm21_bound(test::one_plus_z(n), r, Thm21Variant::proof).value == doctest::Approx(expected).epsilon(1e-10));
      }
    }
  }

  SUBCASE("mu = 1: the variants coincide") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial p = zero_free(rng, 2 + trial % 6, 1.0);
      const BoundResult s = thm21_bound(p, 0.37, Thm21Variant::statement);
      const BoundResult q = thm21_bound(p, 0.37, Thm21Variant::proof);
      REQUIRE(s.applicable);
      CHECK(*q.params.mu == 1);
      CHECK(*s.value == *q.value);
    }
  }

  SUBCASE("64 + z^3 has mu = n and falls outside the theorem") {
    const BoundResult b = thm21_bound(kCubic, 0.5);
    CHECK_FALSE(b.applicable);
    CHECK(mentions(b, "mu=3"));
  }

  SUBCASE("64 + z^3 closed form at r = 0.5 with M(p,1) = 65, m = 63") {
    CHECK(grid_max(kCubic, 1.0) == doctest::Approx(65.0).epsilon(1e-15));
    CHECK(grid_min(kCubic, 1.0) == doctest::Approx(63.0).epsilon(1e-15));
    const double bracket = 65.0 + 3.0 * 63.0 * std::log(2.0 / 1.5);
    // n/mu = 1: numerator 1.5 (statement) or 1.125 (proof), denominator 1.125 + 3*2 - 3*1.5.
    const double statement = 1.5 / 2.625 * bracket;
    const double proof = 1.125 / 2.625 * bracket;
    CHECK(thm21_factor(3, 3, 0.5, Thm21Variant::statement) * bracket == doctest::Approx(statement).epsilon(1e-14));
    CHECK(thm21_factor(3, 3, 0.5, Thm21Variant::proof) * bracket == doctest::Approx(proof).epsilon(1e-14));
    const double measured = grid_max(kCubic, 0.5);
    CHECK(measured == doctest::Approx(64.125).epsilon(1e-14));
    CHECK(proof <= measured);
    // The stated numerator overshoots the true maximum here.
    CHECK(statement > measured);
  }

  SUBCASE("lacunary instance with mu < n against the grid oracle") {
    const double r = 0.4;
    const BoundResult b = thm21_bound(kGapped, r, Thm21Variant::proof);
    REQUIRE(b.applicable);
    CHECK(*b.params.mu == 2);
    const double n = 3.0, mu = 2.0, e = n / mu;
    const double factor = std::pow(1 + r * r, e) / (std::pow(1 + r * r, e) + mu * std::pow(2.0, e) - mu * std::pow(1 + r, e));
    const double expected = factor * (grid_max(kGapped, 1.0) + n * grid_min(kGapped, 1.0) * std::log(2.0 / (1 + r)));
    CHECK(*b.value == doctest::Approx(expected).epsilon(1e-10));
    CHECK(*b.value <= grid_max(kGapped, r));
    CHECK(*b.value <= *thm21_bound(kGapped, r, Thm21Variant::statement).value);
  }
}

TEST_CASE("thm22") {
  SUBCASE("K = 1 reduces to thm21") {
    for (auto variant : {Thm21Variant::statement, Thm21Variant::proof}) {
      CHECK(*thm22_bound(kGapped, 0.3, 1.0, variant).value == *thm21_bound(kGapped, 0.3, variant).value);
    }
    CHECK(*thm22_bound(test::one_plus_z(4), 0.6, 1.0).value == doctest::Approx(std::pow(1.6, 4)).epsilon(1e-10));
  }

  SUBCASE("K-form of the factor equals the unit-disk factor at r/K") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 3 + trial % 8;
      const int mu = 1 + trial % (n - 1);
      const double K = u(rng);
      const double r = K * std::uniform_real_distribution<double>(0.01, 0.99)(rng);
      const double e = static_cast<double>(n) / mu;
      const double lin = std::pow(K, -e) * std::pow(r + K, e);
      const double lac = std::pow(K, -n) * std::pow(std::pow(r, mu) + std::pow(K, mu), e);
      const double den = lac + mu * std::pow(2.0, e) - mu * lin;
      CHECK(thm21_factor(n, mu, r / K, Thm21Variant::statement) == doctest::Approx(lin / den).epsilon(1e-11));
      CHECK(thm21_factor(n, mu, r / K, Thm21Variant::proof) == doctest::Approx(lac / den).epsilon(1e-11));
    }
  }

  SUBCASE("64 + z^2 + z^3 with K = 2 against the displayed K-form") {
    const double K = 2.0, r = 1.0, n = 3.0, mu = 2.0, e = n / mu;
    REQUIRE(certify_zero_free(kGapped, K).holds);
    const double M_K = grid_max(kGapped, K);
    const double m = grid_min(kGapped, K);
    const double lac = std::pow(K, -n) * std::pow(std::pow(r, mu) + std::pow(K, mu), e);
    const double den = lac + mu * std::pow(2.0, e) - mu * std::pow(K, -e) * std::pow(r + K, e);
    const double expected = lac / den * (M_K + n * m * std::log(2 * K / (r + K)));
    const BoundResult b = thm22_bound(kGapped, r, K);
    REQUIRE(b.applicable);
    CHECK(*b.value == doctest::Approx(expected).epsilon(1e-9));
    CHECK(*b.params.reference_max == doctest::Approx(M_K).epsilon(1e-12));
    CHECK(*b.value <= grid_max(kGapped, r));
  }

  SUBCASE("z^3 + 64 with K = 2, r = 1 via the closed form (M(p,2) = 72, m = 56)") {
    CHECK(grid_max(kCubic, 2.0) == doctest::Approx(72.0).epsilon(1e-15));
    CHECK(grid_min(kCubic, 2.0) == doctest::Approx(56.0).epsilon(1e-15));
    const double bracket = 72.0 + 3.0 * 56.0 * std::log(4.0 / 3.0);
    const double proof = thm21_factor(3, 3, 0.5, Thm21Variant::proof) * bracket;
    const double statement = thm21_factor(3, 3, 0.5, Thm21Variant::statement) * bracket;
    CHECK(proof <= 65.0);
    CHECK(statement > 65.0);
    CHECK_FALSE(thm22_bound(kCubic, 1.0, 2.0).applicable);
  }

  SUBCASE("zeros inside the unit disk but outside |z| < K") {
    // Roots at modulus 0.8: only the K-scaled bound applies for r < 0.8.
    const Polynomial p = from_roots(1.0, std::vector<Complex>{0.8, Complex(0.0, 0.9), -2.0});
    CHECK_FALSE(thm21_bound(p, 0.5).applicable);
    const BoundResult b = thm22_bound(p, 0.5, 0.8);
    REQUIRE(b.applicable);
    CHECK(*b.value <= max_modulus(p, 0.5).value);
    CHECK_FALSE(thm22_bound(p, 0.85, 0.8).applicable);
    CHECK_FALSE(thm22_bound(p, 0.5, 0.9).applicable);
  }
}

TEST_CASE("thm23 and its corollaries") {
  SUBCASE("published example (a)") {
    const BoundResult t = thm23_bound(kCubic, 0.1, 0.5, 1.0);
    REQUIRE(t.applicable);
    CHECK(std::abs(*t.params.factor - 0.3943704) <= 5e-8);
    CHECK(std::abs(*t.params.improvement - 23.117715) <= 1e-4);
    CHECK(*t.value == doctest::Approx(*t.params.factor * max_modulus(kCubic, 0.5).value + *t.params.improvement));

    const BoundResult c = cor24_bound(kCubic, 0.1, 0.5);
    const double improvement = std::pow(1.1 / 1.5, 3) * 3.0 * 63.0 * std::log(1.5 / 1.1);
    CHECK(std::abs(improvement - 23.117715) <= 1e-4);
    CHECK(*c.params.improvement == doctest::Approx(improvement).epsilon(1e-13));
    CHECK(*c.value <= grid_max(kCubic, 0.1));
  }

  SUBCASE("published example (b)") {
    const BoundResult c = cor26_bound(kCubic, 0.1);
    REQUIRE(c.applicable);
    CHECK(std::abs(*c.params.factor - 0.166375) <= 1e-6);
    CHECK(std::abs(*c.params.improvement - 18.79891) <= 1e-4);
    const double improvement = 0.166375 * 3.0 * 63.0 * std::log(2.0 / 1.1);
    CHECK(*c.params.improvement == doctest::Approx(improvement).epsilon(1e-13));
  }

  SUBCASE("reductions") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial p = zero_free(rng, 2 + trial % 8, 1.0);
      CHECK(*thm23_bound(p, 0.2, 0.7, 1.0).value == doctest::Approx(*cor24_bound(p, 0.2, 0.7).value).epsilon(1e-12));
      CHECK(*thm23_bound(p, 0.2, 1.0, 1.0).value == doctest::Approx(*cor25_bound(p, 0.2, 1.0).value).epsilon(1e-12));
      CHECK(*cor25_bound(p, 0.2, 1.0).value == doctest::Approx(*cor26_bound(p, 0.2).value).epsilon(1e-12));
    }
    const Polynomial far = zero_free(rng, 5, 2.5);
    CHECK(*thm23_bound(far, 0.3, 1.0, 2.5).value == doctest::Approx(*cor25_bound(far, 0.3, 2.5).value).epsilon(1e-12));
  }

  SUBCASE("zero on the unit circle removes the logarithmic term") {
    const Polynomial p = from_roots(1.0, std::vector<Complex>{std::polar(1.0, 2.0), 3.0, Complex(0.0, -1.5)});
    CHECK(*cor24_bound(p, 0.3, 0.8).value == doctest::Approx(*govil_two_radius_bound(p, 0.3, 0.8).value).epsilon(1e-9));
    CHECK(*cor26_bound(p, 0.3).value == doctest::Approx(*rivlin_bound(p, 0.3).value).epsilon(1e-9));
  }

  SUBCASE("(1+z)^n attains the corollaries") {
    for (int n : {2, 5}) {
      const Polynomial p = test::one_plus_z(n);
      const double r = 0.35;
      const double expected = std::pow(1.0 + r, n);
      CHECK(*cor24_bound(p, r, 0.9).value == doctest::Approx(expected).epsilon(1e-10));
      CHECK(*cor25_bound(p, r, 1.0).value == doctest::Approx(expected).epsilon(1e-10));
      CHECK(*cor26_bound(p, r).value == doctest::Approx(expected).epsilon(1e-10));
    }
  }

  SUBCASE("cor25 on z^3 + 64 with K = 2 (M(p,1) = 65, m(p,2) = 56)") {
    const double lower = std::pow(1.1, 3);
    const double factor = lower / (lower + 27.0 - std::pow(2.1, 3));
    const double expected = factor * (65.0 + 3.0 * 56.0 * std::log(3.0 / 2.1));
    const BoundResult b = cor25_bound(kCubic, 0.1, 2.0);
    REQUIRE(b.applicable);
    CHECK(*b.value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(*b.value <= grid_max(kCubic, 0.1));
  }

  SUBCASE("parameter and hypothesis checks") {
    CHECK(*thm23_bound(kCubic, 0.5, 0.5, 1.0).value == doctest::Approx(64.125).epsilon(1e-14));
    CHECK(*cor24_bound(kCubic, 0.5, 0.5).value == doctest::Approx(64.125).epsilon(1e-14));
    CHECK_FALSE(thm23_bound(kCubic, 0.1, 0.5, 0.9).applicable);  // needs K >= 1
    CHECK_FALSE(thm23_bound(kCubic, 0.1, 0.5, 4.5).applicable);  // root at modulus 4
    CHECK(thm23_bound(kCubic, 0.1, 0.5, 4.0).applicable);        // boundary root allowed
    CHECK_FALSE(cor25_bound(kCubic, 1.0, 2.0).applicable);
    CHECK_FALSE(cor26_bound(kCubic, 1.0).applicable);
    CHECK_FALSE(cor24_bound(kCubic, 0.5, 0.4).applicable);
  }
}

TEST_CASE("Qazi bounds") {
  SUBCASE("mu = 1 gives the two-radius factor") {
    std::mt19937_64 rng(14);
    const Polynomial p = zero_free(rng, 6, 1.0);
    const BoundResult q = qazi_simple_bound(p, 0.2, 0.7);
    REQUIRE(q.applicable);
    CHECK(*q.params.factor == doctest::Approx(*govil_two_radius_bound(p, 0.2, 0.7).params.factor).epsilon(1e-14));
  }

  SUBCASE("r = R is the identity") {
    CHECK(*qazi_simple_bound(kGapped, 0.6, 0.6).value == doctest::Approx(max_modulus(kGapped, 0.6).value).epsilon(1e-15));
    CHECK(*qazi_integral_bound(kGapped, 0.6, 0.6).value == doctest::Approx(max_modulus(kGapped, 0.6).value).epsilon(1e-15));
  }

  SUBCASE("64 + z^3 factor (mu = n = 3)") {
    const double factor = qazi_simple_factor(3, 3, 0.1, 0.5);
    CHECK(factor == doctest::Approx(1.001 / 1.125).epsilon(1e-15));
    CHECK(std::abs(factor - 0.889778) <= 1e-6);
    CHECK(factor * grid_max(kCubic, 0.5) <= grid_max(kCubic, 0.1));
    CHECK_FALSE(qazi_simple_bound(kCubic, 0.1, 0.5).applicable);
  }

  SUBCASE("(mu/n)|a_mu/a_0| = 1 collapses the integrand to 1/(1+t)") {
    // (1+z)^n: mu = 1, ratio = n.
    for (int n : {2, 4, 7}) {
      const Polynomial p = test::one_plus_z(n);
      const BoundResult b = qazi_integral_bound(p, 0.15, 0.85);
      REQUIRE(b.applicable);
      CHECK(*b.params.integral == doctest::Approx(std::log(1.85 / 1.15)).epsilon(1e-12));
      CHECK(*b.value == doctest::Approx(std::pow(1.15, n)).epsilon(1e-10));
    }
  }

  SUBCASE("integral matches a 10^6-panel Simpson oracle") {
    const int n = 3, mu = 2;
    const double ratio = 1.0 / 64.0;
    const double c = static_cast<double>(mu) / n * ratio;
    auto g = [&](double t) { return (t * t + c * t) / (t * t * t + c * (t * t + t) + 1.0); };
    const double oracle = test::fixed_simpson(g, 0.1, 0.5, 1'000'000);
    const BoundResult b = qazi_integral_bound(kGapped, 0.1, 0.5);
    REQUIRE(b.applicable);
    CHECK(std::abs(*b.params.integral - oracle) <= 1e-10);
    CHECK(*b.value >= *qazi_simple_bound(kGapped, 0.1, 0.5).value);
    CHECK(*b.value <= grid_max(kGapped, 0.1));
  }
}

TEST_CASE("mu override") {
  const Polynomial p{5.0, 0.0, 2.0, 0.0, 1.0};
  const BoundResult detected = qazi_simple_bound(p, 0.2, 0.9);
  REQUIRE(detected.applicable);
  CHECK(*detected.params.mu == 2);
  const BoundResult forced = qazi_integral_bound(p, 0.2, 0.9, 1);
  REQUIRE(forced.applicable);
  CHECK(*forced.params.mu == 1);
  CHECK(*forced.params.ratio == 0.0);
  const BoundResult bad = thm21_bound(p, 0.2, Thm21Variant::proof, 3);
  CHECK_FALSE(bad.applicable);
  CHECK(mentions(bad, "override"));
}

TEST_CASE("derivative_upper_bound") {
  for (int n : {2, 3, 6}) {
    const Polynomial p = test::one_plus_z(n);
    const double bound = derivative_upper_bound(p, 1.0);
    CHECK(bound == doctest::Approx(n * std::pow(2.0, n - 1)).epsilon(1e-10));
    CHECK(max_modulus(derivative(p), 1.0).value == doctest::Approx(bound).epsilon(1e-10));
  }
  CHECK(derivative_upper_bound(kCubic, 1.0) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(test::brute_extremum(derivative(kCubic), 1.0, true, kGrid) == doctest::Approx(3.0).epsilon(1e-15));

  const Polynomial nearly_constant{7.0, 0.0, 0.0, 0.0, 1e-3};
  CHECK(derivative_upper_bound(nearly_constant, 1.5) > 0.0);

  CHECK_THROWS_AS(derivative_upper_bound(Polynomial({0.25, 1.0}), 1.0), Error);
  CHECK_THROWS_AS(derivative_upper_bound(kCubic, 0.5), Error);
}

TEST_CASE("best_lower_bound") {
  SUBCASE("monomial: only varga applies") {
    const Polynomial p({0.0, 0.0, 0.0, Complex(0.6, 0.8)});
    const BoundSummary s = best_lower_bound(p, 0.3);
    REQUIRE(s.best);
    CHECK(*s.best == BoundId::varga);
    for (const auto& b : s.bounds) CHECK(b.applicable == (b.id == BoundId::varga));
    CHECK(std::abs(*s.gap) <= 1e-12);
    CHECK(mentions(*s.find(BoundId::rivlin), "zero inside unit disk"));
  }

  SUBCASE("(1+z)^n: equality bounds tie at the measured value") {
    const BoundSummary s = best_lower_bound(test::one_plus_z(5), 0.5);
    CHECK(std::abs(*s.gap) <= 1e-10 * s.measured->value);
    for (BoundId id : {BoundId::rivlin, BoundId::cor26, BoundId::thm21_proof, BoundId::cor25, BoundId::thm23}) {
      CHECK(*s.find(id)->value == doctest::Approx(std::pow(1.5, 5)).epsilon(1e-10));
    }
  }

  SUBCASE("z^3 + 64 at r = 0.1") {
    BestBoundOptions opts;
    opts.R = 0.5;
    const BoundSummary s = best_lower_bound(kCubic, 0.1, opts);
    const double measured = grid_max(kCubic, 0.1);
    CHECK(s.measured->value == doctest::Approx(measured).epsilon(1e-12));
    double best = 0.0;
    for (const auto& b : s.bounds) {
      if (!b.applicable) continue;
      CHECK(*b.value <= measured);
      if (b.id != BoundId::thm21_statement) best = std::max(best, *b.value);
    }
    REQUIRE(s.best);
    CHECK(*s.find(*s.best)->value == best);
    CHECK(*s.gap == doctest::Approx(s.measured->value - best));
    CHECK(*s.best == BoundId::thm23);
  }

  SUBCASE("statement variant is never chosen") {
    const BoundSummary s = best_lower_bound(Polynomial({1.0, 0.0, 0.0, 0.4, 0.0, 0.2}), 0.9);
    REQUIRE(s.best);
    CHECK(*s.best != BoundId::thm21_statement);
  }

  SUBCASE("default K follows the certified radius when the unit disk has zeros") {
    const Polynomial p = from_roots(1.0, std::vector<Complex>{0.8, Complex(0.0, 0.9), -2.0});
    const BoundSummary s = best_lower_bound(p, 0.5);
    CHECK(s.find(BoundId::thm22)->applicable);
    CHECK(*s.find(BoundId::thm22)->params.K == doctest::Approx(0.8).epsilon(1e-12));
  }

  CHECK_THROWS_AS(best_lower_bound(kCubic, 1.0), Error);
  CHECK_THROWS_AS(best_lower_bound(kCubic, 0.0), Error);
}

TEST_CASE("catalog invariants on random zero-free polynomials") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial p = zero_free(rng, 2 + trial % 9, 1.0);
    const double r = u(rng);
    const double R = r + (1.0 - r) * u(rng);
    const double measured = max_modulus(p, r).value;
    const double varga = *varga_bound(p, r).value;
    const double rivlin = *rivlin_bound(p, r).value;
    const double cor26 = *cor26_bound(p, r).value;
    CHECK(varga <= rivlin * (1 + 1e-12));
    CHECK(rivlin <= cor26 * (1 + 1e-12));
    CHECK(*govil_two_radius_bound(p, r, R).value <= *cor24_bound(p, r, R).value * (1 + 1e-12));
    CHECK(*qazi_simple_bound(p, r, R).value <= *qazi_integral_bound(p, r, R).value * (1 + 1e-12));
    for (const auto& b : best_lower_bound(p, r, {R, 1.0, std::nullopt, false}).bounds) {
      if (b.applicable && b.id != BoundId::thm21_statement) CHECK(*b.value <= measured * (1 + 1e-9) + 1e-12);
    }
    const double M1 = max_modulus(p, 1.0).value;
    const double Md = max_modulus(derivative(p), 1.0).value;
    CHECK(Md <= derivative_upper_bound(p, 1.0) * (1 + 1e-9));
    CHECK(Md <= 0.5 * p.degree() * M1 * (1 + 1e-9));
  }
}
