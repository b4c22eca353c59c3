#include "fpm/gamma.hpp"

#include <cmath>
#include <limits>

namespace fpm::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

double lanczos_positive(double x) {
  // Valid for x >= 0.5.
  double a = kLanczos[0];
  const double z = x - 1.0;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) return std::numeric_limits<double>::infinity();
  if (x >= 0.5) {
    if (x > 171.7) return std::numeric_limits<double>::infinity();
    return lanczos_positive(x);
  }
  // Reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x)).
  const double s = std::sin(kPi * x);
  const double g1mx = 1.0 - x;
  if (g1mx > 171.7) {
    // Gamma(1-x) overflows, so Gamma(x) underflows to signed zero.
    return (s > 0.0) ? 0.0 : -0.0;
  }
  return kPi / (s * lanczos_positive(g1mx));
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) {
    if (x > 171.7) return 0.0;
    return 1.0 / lanczos_positive(x);
  }
  const double s = std::sin(kPi * x);
  const double g1mx = 1.0 - x;
  if (g1mx > 171.7) {
    // 1/Gamma grows without bound between the far-left poles.
    const LogRecipGamma lg = log_reciprocal_gamma(x);
    return lg.sign * std::exp(lg.log_abs);
  }
  return s * lanczos_positive(g1mx) / kPi;
}

LogRecipGamma log_reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    return {-std::numeric_limits<double>::infinity(), 0};
  }
  if (x > 0.0) return {-std::lgamma(x), 1};
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi for x < 0.
  const double s = std::sin(kPi * x);
  const double log_abs = std::log(std::abs(s)) + std::lgamma(1.0 - x) - std::log(kPi);
  return {log_abs, s > 0.0 ? 1 : -1};
}

}  // namespace fpm::specfun
