#ifndef FPM_SPECFUN_HPP
#define FPM_SPECFUN_HPP

#include <complex>

#include "fpm/errors.hpp"
#include "fpm/gamma.hpp"
#include "fpm/rng.hpp"

namespace fpm::specfun {

/// Order parameter of the fractional law, beta in (0, 1].
struct Beta {
  double value;
  explicit Beta(double v) : value(v) {
    if (!(v > 0.0) || !(v <= 1.0)) {
      throw DomainError("Beta: order parameter must lie in (0, 1]");
    }
  }
};

/// Accuracy request for the series evaluators. The target is an absolute
/// error for results of magnitude <= 1 and is applied relatively beyond
/// that (results such as high derivatives reach 1e+100 and more).
struct PrecisionBudget {
  double target_abs_err = 1e-10;
  int max_terms = 4000;
  int extended_digits = 64;  // head room assumed of the fallback route

  void validate() const {
    if (!(target_abs_err > 0.0)) {
      throw DomainError("PrecisionBudget: target_abs_err must be > 0");
    }
    if (max_terms <= 0 || extended_digits <= 0) {
      throw DomainError("PrecisionBudget: max_terms and extended_digits must be positive");
    }
  }
};

/// Mittag-Leffler function E_beta(z) = sum_n z^n / Gamma(beta n + 1).
/// Power series with compensated accumulation; for real z < 0 a
/// completely-monotone integral representation takes over when the
/// alternating series cannot meet the budget. E_1(z) = exp(z) exactly.
std::complex<double> mittag_leffler(Beta beta, std::complex<double> z,
                                    const PrecisionBudget& budget = {});

/// k-th derivative E_beta^{(k)}(x) = sum_n ((n+k)!/n!) x^n / Gamma(beta(n+k)+1).
/// Nonnegative for x <= 0 by complete monotonicity.
double ml_derivative(Beta beta, int k, double x, const PrecisionBudget& budget = {});

/// log E_beta^{(k)}(x) for x <= 0, usable when the value itself would
/// overflow (large k). Also reports the achieved absolute log-error bound:
/// |computed - true| <= exp(log_abs_err) on the value scale.
struct LogValue {
  double log_value;
  double log_abs_err;
};
LogValue ml_derivative_log(Beta beta, int k, double x, const PrecisionBudget& budget = {});

/// log E_beta(x) for x >= 0 (all series terms positive; summed in log scale).
double log_mittag_leffler_pos(Beta beta, double x);

/// M-Wright density W_{-beta,1-beta}(tau) of the mixing measure nu_beta:
/// sum_n (-tau)^n / (n! Gamma(1 - beta - beta n)), with 1/Gamma = 0 at the
/// poles. Only the series-stable range of tau is supported; beyond it the
/// evaluation raises CancellationBudgetExceeded. beta = 1 is rejected
/// (nu_1 is the point mass at 1 and has no density).
double mwright_density(Beta beta, double tau, const PrecisionBudget& budget = {});

/// Largest tau for which mwright_density can certify the given absolute
/// error at double working precision (for quadrature limits in tests).
double mwright_stable_tau_max(Beta beta, double target_abs_err = 1e-9);

/// Draw tau ~ nu_beta. For beta = 1 returns exactly 1; otherwise
/// tau = S^{-beta} with S one-sided beta-stable (Laplace transform
/// exp(-s^beta)) from the Kanter representation. Rejection-free.
double sample_nu_beta(Beta beta, Rng& rng);

}  // namespace fpm::specfun

#endif
