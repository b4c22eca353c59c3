#ifndef FPM_GAMMA_HPP
#define FPM_GAMMA_HPP

namespace fpm::specfun {

/// Gamma function, Lanczos approximation (g = 7, 9 terms) with reflection
/// for x < 0.5. Relative error is a few ulps times 10 on [0.1, 50].
/// Non-positive integer arguments return +infinity.
double gamma_fn(double x);

/// 1 / Gamma(x) with the analytic-continuation convention
/// 1/Gamma(non-positive integer) = 0.
double reciprocal_gamma(double x);

/// log|1/Gamma(x)| together with the sign of 1/Gamma(x).
/// sign is 0 exactly at the poles of Gamma. Stable for very negative x,
/// where Gamma itself under/overflows.
struct LogRecipGamma {
  double log_abs;
  int sign;
};
LogRecipGamma log_reciprocal_gamma(double x);

}  // namespace fpm::specfun

#endif
