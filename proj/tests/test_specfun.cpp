#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "fpm/specfun.hpp"
#include "support/bigfixed.hpp"

using namespace fpm;
using namespace fpm::specfun;
using testsupport::BigFixed;

namespace {

// Extended-precision direct summation of E_{1/2}(-a) for rational a = p/q:
// even terms a^{2j}/j!, odd terms -a^{2j+1} * 2^{j+1} / ((2j+1)!! sqrt(pi)),
// both generated by exact small-integer recurrences in ~234-digit fixed
// point. Independent of the library's evaluation paths.
double ml_half_oracle(std::uint32_t p, std::uint32_t q) {
  BigFixed even = BigFixed::from_uint(1);
  BigFixed odd =
      testsupport::big_inv_sqrt_pi().mul_small(2).mul_small(p).div_small(q).neg();
  BigFixed sum = even + odd;
  for (int j = 0; j < 400; ++j) {
    even = even.mul_small(std::uint64_t(p) * p).div_small(std::uint64_t(q) * q);
    even = even.div_small(j + 1);
    odd = odd.mul_small(std::uint64_t(p) * p).div_small(std::uint64_t(q) * q);
    odd = odd.mul_small(2).div_small(2 * j + 3);
    sum = sum + even + odd;
    if (even.abs_double() < 1e-60 && odd.abs_double() < 1e-60 && j > 8) break;
  }
  return sum.to_double();
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Composite Simpson on [a, b].
template <class F>
double simpson(F&& f, double a, double b, int n_panels) {
  const double h = (b - a) / (2 * n_panels);
  double acc = f(a) + f(b);
  for (int i = 1; i < 2 * n_panels; ++i) acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("gamma function values and conventions") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  for (double x = 0.1; x <= 50.0; x += 0.37) {
    CHECK(rel_err(gamma_fn(x), std::tgamma(x)) < 1e-13);
  }
  CHECK(rel_err(gamma_fn(-2.5), std::tgamma(-2.5)) < 1e-12);
  CHECK(std::isinf(gamma_fn(0.0)));
  CHECK(std::isinf(gamma_fn(-3.0)));
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-7.0) == 0.0);
  CHECK(reciprocal_gamma(3.0) == doctest::Approx(0.5).epsilon(1e-14));
  const auto lg = log_reciprocal_gamma(-4.3);
  CHECK(lg.sign * std::exp(lg.log_abs) ==
        doctest::Approx(reciprocal_gamma(-4.3)).epsilon(1e-12));
}

TEST_CASE("Beta and PrecisionBudget invariants") {
  CHECK_THROWS_AS(Beta(0.0), DomainError);
  CHECK_THROWS_AS(Beta(1.2), DomainError);
  CHECK_NOTHROW(Beta(1.0));
  PrecisionBudget bad;
  bad.target_abs_err = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("Mittag-Leffler reduces to exp at beta = 1") {
  const Beta one(1.0);
  for (double x = -20.0; x <= 20.0; x += 2.5) {
    CHECK(std::abs(mittag_leffler(one, x).real() - std::exp(x)) <=
          1e-13 * std::exp(x));
  }
  const std::complex<double> z{1.2, -0.7};
  CHECK(std::abs(mittag_leffler(one, z) - std::exp(z)) < 1e-13 * std::abs(std::exp(z)));
}

TEST_CASE("Mittag-Leffler basics") {
  CHECK(mittag_leffler(Beta(0.7), 0.0).real() == 1.0);
  CHECK(mittag_leffler(Beta(1.0), 1.5).real() ==
        doctest::Approx(std::exp(1.5)).epsilon(1e-14));
}

TEST_CASE("Mittag-Leffler against the extended-precision oracle") {
  const double ref1 = ml_half_oracle(1, 1);  // z = -1
  const double ref2 = ml_half_oracle(5, 2);  // z = -2.5
  CHECK(std::abs(mittag_leffler(Beta(0.5), -1.0).real() - ref1) < 1e-12);
  CHECK(std::abs(mittag_leffler(Beta(0.5), -2.5).real() - ref2) < 1e-12);
  // The oracle itself matches the classical closed form e^{x^2} erfc(x).
  CHECK(rel_err(ref1, std::exp(1.0) * std::erfc(1.0)) < 1e-14);
}

TEST_CASE("beta = 1/2 closed form over the whole axis exercises both routes") {
  // Small x goes through the series, large x through the cancellation-free
  // integral representation.
  for (double x : {0.25, 1.0, 2.5, 5.0, 8.0, 12.0, 20.0}) {
    const double want = std::exp(x * x) * std::erfc(x);
    CHECK(rel_err(ml_derivative(Beta(0.5), 0, -x), want) < 1e-11);
  }
}

TEST_CASE("derivative series and integral representation agree") {
  PrecisionBudget force_integral;
  force_integral.max_terms = 1;  // makes the series route unusable
  force_integral.target_abs_err = 1e-9;
  for (double b : {0.4, 0.6, 0.85}) {
    for (double lam : {0.5, 1.0}) {
      for (int k : {0, 1, 2, 4, 7}) {
        const double via_series = ml_derivative(Beta(b), k, -lam);
        const auto lv = ml_derivative_log(Beta(b), k, -lam, force_integral);
        CHECK(rel_err(via_series, std::exp(lv.log_value)) < 1e-10);
      }
    }
  }
}

TEST_CASE("derivative special values") {
  CHECK(ml_derivative(Beta(0.7), 0, -1.3) ==
        doctest::Approx(mittag_leffler(Beta(0.7), -1.3).real()).epsilon(1e-13));
  CHECK(ml_derivative(Beta(1.0), 3, -2.0) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  // x = 0 leaves only the first term: k! / Gamma(beta k + 1).
  for (int k : {0, 1, 3, 6}) {
    const double want =
        std::exp(std::lgamma(k + 1.0)) * reciprocal_gamma(0.5 * k + 1.0);
    CHECK(ml_derivative(Beta(0.5), k, 0.0) == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("complete monotonicity surrogate on a (beta, lambda, k) grid") {
  for (double b : {0.3, 0.5, 0.7, 0.9, 1.0}) {
    for (double lam : {0.25, 1.0, 2.0, 4.0}) {
      for (int k = 0; k <= 30; k += 3) {
        CHECK(ml_derivative(Beta(b), k, -lam) >= -1e-10);
      }
    }
  }
}

TEST_CASE("M-Wright density: closed form, domain, support point") {
  CHECK_THROWS_AS(mwright_density(Beta(1.0), 0.5), DomainError);
  CHECK_THROWS_AS(mwright_density(Beta(0.5), -0.1), DomainError);
  CHECK(mwright_density(Beta(0.5), 0.0) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(mwright_density(Beta(0.3), 0.0) ==
        doctest::Approx(reciprocal_gamma(0.7)).epsilon(1e-14));
  for (double tau : {0.2, 1.0, 2.5, 5.0}) {
    const double want = std::exp(-tau * tau / 4.0) / std::sqrt(M_PI);
    CHECK(std::abs(mwright_density(Beta(0.5), tau) - want) < 1e-10);
  }
  const double tau_max = mwright_stable_tau_max(Beta(0.3));
  CHECK_THROWS_AS(mwright_density(Beta(0.3), 4.0 * tau_max),
                  CancellationBudgetExceeded);
}

TEST_CASE("M-Wright integrates to one and Laplace-transforms to E_beta") {
  // The integral tolerance is 1e-6, so a pointwise density budget of 3e-7
  // is ample; the betas are chosen so the stretched-exponential tail falls
  // below the tolerance inside the series-stable range (for beta near 1
  // the tail is heavier than double precision can chase).
  PrecisionBudget loose;
  loose.target_abs_err = 3e-7;
  const std::vector<std::pair<double, double>> cases = {{0.3, 12.1}, {0.5, 7.8}};
  for (const auto& [b, needed_range] : cases) {
    const Beta beta(b);
    const double t_end = 0.98 * mwright_stable_tau_max(beta, 3e-7);
    REQUIRE(t_end > needed_range);
    const double mass = simpson(
        [&](double t) { return mwright_density(beta, t, loose); }, 0.0, t_end, 4000);
    CHECK(std::abs(mass - 1.0) < 1e-6);

    for (double z : {0.5, 1.0, 2.0}) {
      const double transformed = simpson(
          [&](double t) { return std::exp(-z * t) * mwright_density(beta, t, loose); },
          0.0, t_end, 4000);
      CHECK(std::abs(transformed - ml_derivative(beta, 0, -z)) < 1e-6);
    }
  }
}

TEST_CASE("moment transform of the density matches the derivatives") {
  // int tau^k e^{-lambda tau} W(tau) dtau = E^{(k)}(-lambda), k <= 6. The
  // e^{-lambda tau} factor kills the tail well inside the stable range.
  PrecisionBudget loose;
  loose.target_abs_err = 3e-7;
  const double lam = 2.0;
  const std::vector<std::pair<double, double>> cases = {{0.4, 8.5}, {0.6, 5.4}};
  for (const auto& [b, needed_range] : cases) {
    const Beta beta(b);
    const double t_end = 0.98 * mwright_stable_tau_max(beta, 3e-7);
    REQUIRE(t_end > needed_range);
    for (int k = 0; k <= 6; ++k) {
      const double got = simpson(
          [&](double t) {
            return std::pow(t, k) * std::exp(-lam * t) * mwright_density(beta, t, loose);
          },
          0.0, t_end, 4000);
      CHECK(std::abs(got - ml_derivative(beta, k, -lam)) < 1e-6);
    }
  }
}

TEST_CASE("cancellation budget errors are reachable and typed") {
  PrecisionBudget tight;
  tight.target_abs_err = 1e-13;
  tight.max_terms = 3000;
  // Complex argument with strong cancellation has no fallback route.
  CHECK_THROWS_AS(mittag_leffler(Beta(0.35), {-30.0, 5.0}, tight),
                  CancellationBudgetExceeded);
}

TEST_CASE("nu_beta sampler: point mass at beta = 1 and sampled moments") {
  Rng rng(5150);
  for (int i = 0; i < 100; ++i) CHECK(sample_nu_beta(Beta(1.0), rng) == 1.0);

  const int n = 100000;
  for (double b : {0.6, 0.5}) {
    const Beta beta(b);
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double tau = sample_nu_beta(beta, rng);
      REQUIRE(tau > 0.0);
      sum += tau;
      sum_sq += tau * tau;
    }
    const double mean = sum / n;
    const double want_mean = reciprocal_gamma(1.0 + b);
    const double se = std::sqrt((sum_sq / n - mean * mean) / n);
    CHECK(std::abs(mean - want_mean) < 4.0 * se);
  }
}

TEST_CASE("nu_beta sampler matches the Mittag-Leffler Laplace transform") {
  Rng rng(8080);
  const int n = 100000;
  const Beta beta(0.5);
  std::vector<double> taus(n);
  for (int i = 0; i < n; ++i) taus[i] = sample_nu_beta(beta, rng);
  for (double z : {0.5, 1.0, 2.0}) {
    double s = 0.0, s2 = 0.0;
    for (double tau : taus) {
      const double v = std::exp(-z * tau);
      s += v;
      s2 += v * v;
    }
    const double mean = s / n;
    const double se = std::sqrt((s2 / n - mean * mean) / n);
    CHECK(std::abs(mean - ml_derivative(beta, 0, -z)) < 4.0 * se);
  }
}

TEST_CASE("positive-axis log evaluation") {
  CHECK(log_mittag_leffler_pos(Beta(1.0), 3.0) == doctest::Approx(3.0));
  CHECK(log_mittag_leffler_pos(Beta(0.5), 0.0) == 0.0);
  // E_{1/2}(x) = exp(x^2) erfc(-x) for x > 0.
  for (double x : {0.5, 2.0, 4.0}) {
    const double want = x * x + std::log(std::erfc(-x));
    CHECK(log_mittag_leffler_pos(Beta(0.5), x) == doctest::Approx(want).epsilon(1e-10));
  }
}
