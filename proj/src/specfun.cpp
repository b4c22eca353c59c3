#include "fpm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fpm::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// Neumaier-compensated accumulator.
struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double total() const { return sum + comp; }
};

// One term of the derivative series, log magnitude:
// t_n = ((n+k)!/n!) x^n / Gamma(beta (n+k) + 1).
double deriv_term_log(double beta, int k, double log_abs_x, int n) {
  return std::lgamma(double(n + k) + 1.0) - std::lgamma(double(n) + 1.0) +
         n * log_abs_x - std::lgamma(beta * (n + k) + 1.0);
}

struct SeriesOut {
  double value = 0.0;
  double abs_err = kInf;
  bool usable = false;
};

/// Direct summation of E_beta^{(k)}(x) for real x, with a running
/// cancellation estimate. Declares itself unusable when terms leave the
/// double range or the term cap is hit while still growing.
SeriesOut ml_series_real(double beta, int k, double x, int max_terms) {
  SeriesOut out;
  if (x == 0.0) {
    out.value = std::exp(std::lgamma(double(k) + 1.0) - std::lgamma(beta * k + 1.0));
    out.abs_err = out.value * 4e-15;
    out.usable = true;
    return out;
  }
  const double lax = std::log(std::abs(x));
  const bool neg = x < 0.0;

  Neumaier acc;
  double abs_sum = 0.0;
  double err_sum = 0.0;
  double peak_log = -kInf;
  double prev_abs = kInf;
  for (int n = 0; n < max_terms; ++n) {
    const double lt = deriv_term_log(beta, k, lax, n);
    if (lt > 690.0) return out;  // term leaves double range
    peak_log = std::max(peak_log, lt);
    const double mag = std::exp(lt);
    const double term = (neg && (n & 1)) ? -mag : mag;
    acc.add(term);
    abs_sum += mag;
    err_sum += mag * (1e-15 + 5e-16 * std::abs(lt));
    // Terms decay superexponentially once past the peak.
    if (n > 0 && mag < prev_abs && lt < peak_log - 4.0) {
      const double ratio = mag / prev_abs;
      if (ratio < 0.9 && mag < 1e-18 * std::max(abs_sum, 1.0) + 1e-300) {
        out.value = acc.total();
        out.abs_err = err_sum + 10.0 * mag;
        out.usable = true;
        return out;
      }
    }
    prev_abs = mag;
  }
  return out;  // cap hit
}

/// Generic log-scale trapezoid of exp(log_f) over the whole real line for
/// a smooth, unimodal-after-peak integrand that decays on both sides.
/// Returns log of the integral.
template <class F>
double log_trapezoid(F&& log_f, double v_guess_lo, double v_guess_hi) {
  double best_v = v_guess_lo, best = log_f(v_guess_lo);
  for (double v = v_guess_lo; v <= v_guess_hi; v += 0.5) {
    const double lf = log_f(v);
    if (lf > best) {
      best = lf;
      best_v = v;
    }
  }
  double lo = best_v - 0.5, hi = best_v + 0.5;
  for (int it = 0; it < 70; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (log_f(m1) < log_f(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  const double v_peak = 0.5 * (lo + hi);
  const double lf_peak = log_f(v_peak);

  double v_left = v_peak;
  while (log_f(v_left) > lf_peak - 46.0) v_left -= 0.5;
  double v_right = v_peak;
  while (log_f(v_right) > lf_peak - 46.0) v_right += 0.5;

  auto pass = [&](double h) {
    Neumaier s;
    const long n_steps = std::lround(std::ceil((v_right - v_left) / h));
    for (long i = 0; i <= n_steps; ++i) {
      const double v = v_left + i * h;
      double w = std::exp(log_f(v) - lf_peak);
      if (i == 0 || i == n_steps) w *= 0.5;
      s.add(w);
    }
    return s.total() * h;
  };

  double h = 0.25;
  double prev = pass(h);
  for (int depth = 0; depth < 5; ++depth) {
    h *= 0.5;
    const double cur = pass(h);
    const bool converged = std::abs(cur - prev) <= 1e-14 * std::abs(cur);
    prev = cur;
    if (converged) break;
  }
  return lf_peak + std::log(prev);
}

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
constexpr double kGlNode[8] = {0.0950125098376374, 0.2816035507792589,
                               0.4580167776572274, 0.6178762444026438,
                               0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeight[8] = {0.1894506104550685, 0.1826034150449236,
                                 0.1691565193950025, 0.1495959888165767,
                                 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};

/// log E_beta^{(k)}(-lambda), lambda > 0, 0 < beta < 1, through the mixture
/// representation with the one-sided-stable mixing variable in Kanter form:
///   E_beta^{(k)}(-lambda) = E[tau^k e^{-lambda tau}],
///   tau = (W / A(U))^{1-beta},  U ~ Unif(0,pi), W ~ Exp(1).
/// Integrating W out first gives, with q = 1/(1-beta), p = k + q - 1 and
/// eta(u) = A(u)^{-(1-beta)},
///   E_beta^{(k)}(-lambda) = (q/pi) int_0^pi eta(u)^k G(lambda eta(u)) du,
///   G(mu) = int_0^inf t^p exp(-mu t - t^q) dt.
/// Every integrand is positive, so the evaluation is cancellation-free.
double ml_spectral_log(double beta, int k, double lambda) {
  const double q = 1.0 / (1.0 - beta);
  const double p1 = k + q;  // p + 1

  // Inner integral in v = ln t.
  auto log_g = [&](double mu) {
    auto log_f = [&](double v) {
      double t = std::exp(v);
      double tq = std::exp(q * v);
      return p1 * v - mu * t - tq;
    };
    // Peak below max(ln(p1/mu), (1/q) ln(p1/q)); scan a generous window.
    double hint = std::log(p1) / std::min(q, 1.0);
    return log_trapezoid(log_f, hint - 45.0, hint + 6.0);
  };

  // ln eta(u) = ln sin u - beta ln sin(beta u) - (1-beta) ln sin((1-beta) u).
  auto log_eta = [&](double u) {
    return std::log(std::sin(u)) - beta * std::log(std::sin(beta * u)) -
           (1.0 - beta) * std::log(std::sin((1.0 - beta) * u));
  };

  auto outer_log_integrand = [&](double u) {
    const double le = log_eta(u);
    return k * le + log_g(lambda * std::exp(le));
  };

  // Composite Gauss-Legendre over (0, pi), log-max trick, panel doubling.
  auto integrate = [&](int panels) {
    std::vector<double> logs;
    std::vector<double> weights;
    logs.reserve(panels * 16);
    weights.reserve(panels * 16);
    const double width = kPi / panels;
    double peak = -kInf;
    for (int pnl = 0; pnl < panels; ++pnl) {
      const double mid = (pnl + 0.5) * width;
      for (int j = 0; j < 8; ++j) {
        for (int sgn = -1; sgn <= 1; sgn += 2) {
          const double u = mid + sgn * 0.5 * width * kGlNode[j];
          const double lf = outer_log_integrand(u);
          logs.push_back(lf);
          weights.push_back(0.5 * width * kGlWeight[j]);
          peak = std::max(peak, lf);
        }
      }
    }
    Neumaier s;
    for (std::size_t i = 0; i < logs.size(); ++i) {
      s.add(weights[i] * std::exp(logs[i] - peak));
    }
    return peak + std::log(s.total());
  };

  double result = integrate(8);
  for (int panels = 16; panels <= 64; panels *= 2) {
    const double refined = integrate(panels);
    const bool converged = std::abs(refined - result) <= 1e-13;
    result = refined;
    if (converged) break;
  }
  return std::log(q / kPi) + result;
}

}  // namespace

double log_mittag_leffler_pos(Beta beta, double x) {
  if (x < 0.0) throw DomainError("log_mittag_leffler_pos: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (beta.value == 1.0) return x;
  const double b = beta.value;
  const double lx = std::log(x);
  // All terms positive: scaled summation against the running peak.
  double peak = 0.0;  // log of term n = 0
  std::vector<double> logs;
  logs.reserve(256);
  logs.push_back(0.0);
  for (long n = 1; n < 2000000; ++n) {
    const double lt = n * lx - std::lgamma(b * n + 1.0);
    logs.push_back(lt);
    peak = std::max(peak, lt);
    if (lt < peak - 42.0 && n > 4) break;
  }
  Neumaier s;
  for (double lt : logs) s.add(std::exp(lt - peak));
  return peak + std::log(s.total());
}

LogValue ml_derivative_log(Beta beta, int k, double x, const PrecisionBudget& budget) {
  budget.validate();
  if (k < 0) throw DomainError("ml_derivative: k must be >= 0");
  const double b = beta.value;
  if (b == 1.0) return {x, x + std::log(4e-16)};
  if (x == 0.0) {
    const double lv = std::lgamma(double(k) + 1.0) - std::lgamma(b * k + 1.0);
    return {lv, lv + std::log(4e-15)};
  }

  const SeriesOut s = ml_series_real(b, k, x, budget.max_terms);
  if (s.usable && x > 0.0) {
    return {std::log(s.value), std::log(s.abs_err)};
  }
  // Relative acceptance: the log form is meant for values of any scale.
  if (s.usable && s.value > 0.0 &&
      s.abs_err <= budget.target_abs_err * s.value) {
    return {std::log(s.value), std::log(s.abs_err)};
  }
  if (x < 0.0) {
    const double lv = ml_spectral_log(b, k, -x);
    return {lv, lv + std::log(5e-13)};
  }
  throw CancellationBudgetExceeded("ml_derivative: series cancellation exceeds budget");
}

double ml_derivative(Beta beta, int k, double x, const PrecisionBudget& budget) {
  budget.validate();
  if (k < 0) throw DomainError("ml_derivative: k must be >= 0");
  if (beta.value == 1.0) return std::exp(x);
  if (x == 0.0) {
    return std::exp(std::lgamma(double(k) + 1.0) - std::lgamma(beta.value * k + 1.0));
  }

  // The budget target is absolute for O(1) results and applied relatively
  // beyond magnitude 1 (an absolute 1e-10 makes no sense for values ~1e+30).
  const SeriesOut s = ml_series_real(beta.value, k, x, budget.max_terms);
  if (s.usable &&
      s.abs_err <= budget.target_abs_err * std::max(1.0, std::abs(s.value))) {
    if (x < 0.0 && s.value < -budget.target_abs_err) {
      throw NegativeResultAnomaly("ml_derivative: negative value on the negative axis");
    }
    return (x < 0.0) ? std::max(s.value, 0.0) : s.value;
  }
  if (x < 0.0) {
    const double lv = ml_spectral_log(beta.value, k, -x);
    const double value = std::exp(lv);
    if (value * 5e-13 > budget.target_abs_err * std::max(1.0, value) &&
        std::isfinite(value)) {
      throw CancellationBudgetExceeded(
          "ml_derivative: requested absolute error below achievable precision");
    }
    return value;
  }
  if (s.usable) return s.value;  // positive series, no cancellation
  return kInf;                   // growing beyond the double range
}

std::complex<double> mittag_leffler(Beta beta, std::complex<double> z,
                                    const PrecisionBudget& budget) {
  budget.validate();
  if (beta.value == 1.0) return std::exp(z);
  if (z == std::complex<double>(0.0, 0.0)) return 1.0;
  if (z.imag() == 0.0) return ml_derivative(beta, 0, z.real(), budget);

  const double b = beta.value;
  const double laz = std::log(std::abs(z));
  const double argz = std::arg(z);
  Neumaier re, im;
  double abs_sum = 0.0, err_sum = 0.0, peak_log = -kInf, prev_abs = kInf;
  for (int n = 0; n < budget.max_terms; ++n) {
    const double lt = n * laz - std::lgamma(b * n + 1.0);
    if (lt > 690.0) {
      throw CancellationBudgetExceeded("mittag_leffler: series leaves the double range");
    }
    peak_log = std::max(peak_log, lt);
    const double mag = std::exp(lt);
    const std::complex<double> term = std::polar(mag, n * argz);
    re.add(term.real());
    im.add(term.imag());
    abs_sum += mag;
    err_sum += mag * (1e-15 + 5e-16 * std::abs(lt));
    if (n > 0 && mag < prev_abs && lt < peak_log - 4.0) {
      if (mag / prev_abs < 0.9 && mag < 1e-18 * std::max(abs_sum, 1.0) + 1e-300) {
        err_sum += 10.0 * mag;
        const std::complex<double> value{re.total(), im.total()};
        if (err_sum > budget.target_abs_err * std::max(1.0, std::abs(value))) {
          throw CancellationBudgetExceeded(
              "mittag_leffler: cancellation estimate exceeds target for complex argument");
        }
        return value;
      }
    }
    prev_abs = mag;
  }
  throw CancellationBudgetExceeded("mittag_leffler: term budget exhausted");
}

namespace {

struct MwrightSeries {
  double value = 0.0;
  double abs_err = kInf;
};

MwrightSeries mwright_series(double b, double tau, int max_terms) {
  MwrightSeries out;
  if (tau == 0.0) {
    out.value = reciprocal_gamma(1.0 - b);
    out.abs_err = 4e-16;
    return out;
  }
  const double ltau = std::log(tau);
  Neumaier acc;
  double abs_sum = 0.0, err_sum = 0.0, peak_log = -kInf;
  double tail_mag = kInf;
  int quiet_streak = 0;
  for (int n = 0; n < max_terms; ++n) {
    const LogRecipGamma rg = log_reciprocal_gamma(1.0 - b - b * n);
    if (rg.sign == 0) continue;  // 1/Gamma = 0 at the poles
    const double lgn = std::lgamma(double(n) + 1.0);
    const double lt = n * ltau - lgn + rg.log_abs;
    if (lt > 690.0) return out;  // series leaves the double range
    peak_log = std::max(peak_log, lt);
    const double mag = std::exp(lt);
    const int sign = ((n & 1) ? -1 : 1) * rg.sign;
    acc.add(sign * mag);
    abs_sum += mag;
    // Per-term error: ulps of each log ingredient, amplified through exp.
    err_sum += mag * 1.2e-16 *
               (2.0 + std::abs(n * ltau) + lgn + std::abs(rg.log_abs));
    tail_mag = mag;
    // The term magnitudes are not unimodal: 1/Gamma dips near its zeros
    // and rebounds over the next few indices. Stop only after a sustained
    // run of negligible terms well past the peak, never at a single dip.
    if (n > 4 && lt < peak_log - 42.0 && mag < 1e-18 * std::max(abs_sum, 1.0)) {
      if (++quiet_streak >= 10) {
        out.value = acc.total();
        out.abs_err = err_sum + 10.0 * mag;
        return out;
      }
    } else {
      quiet_streak = 0;
    }
  }
  out.value = acc.total();
  out.abs_err = err_sum + 10.0 * tail_mag;
  return out;
}

}  // namespace

double mwright_density(Beta beta, double tau, const PrecisionBudget& budget) {
  budget.validate();
  if (beta.value == 1.0) {
    throw DomainError("mwright_density: beta = 1 is the point mass at 1 (no density)");
  }
  if (tau < 0.0) throw DomainError("mwright_density: tau must be >= 0");
  const MwrightSeries s = mwright_series(beta.value, tau, budget.max_terms);
  if (!(s.abs_err <= budget.target_abs_err)) {
    throw CancellationBudgetExceeded("mwright_density: tau beyond the series-stable range");
  }
  if (s.value < -budget.target_abs_err) {
    throw NegativeResultAnomaly("mwright_density: negative density value");
  }
  return std::max(s.value, 0.0);
}

double mwright_stable_tau_max(Beta beta, double target_abs_err) {
  const double b = beta.value;
  if (b == 1.0) throw DomainError("mwright_stable_tau_max: beta = 1 has no density");
  auto certifiable = [&](double tau) {
    return mwright_series(b, tau, 10000).abs_err <= target_abs_err;
  };
  double lo = 0.5, hi = 400.0;
  if (!certifiable(lo)) return lo;
  for (int it = 0; it < 60; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (certifiable(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double sample_nu_beta(Beta beta, Rng& rng) {
  const double b = beta.value;
  if (b == 1.0) return 1.0;
  // Kanter: S = (A(U)/W)^{(1-b)/b} is one-sided b-stable with Laplace
  // transform exp(-s^b), U uniform on (0,pi), W standard exponential;
  // tau = S^{-b} then has Laplace transform E_b(-z).
  const double u = kPi * rng.uniform_open();
  const double w = rng.exponential();
  const double log_a = (b / (1.0 - b)) * std::log(std::sin(b * u)) +
                       std::log(std::sin((1.0 - b) * u)) -
                       (1.0 / (1.0 - b)) * std::log(std::sin(u));
  return std::exp((1.0 - b) * (std::log(w) - log_a));
}

}  // namespace fpm::specfun
