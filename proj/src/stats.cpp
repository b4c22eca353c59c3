#include "fpm/stats.hpp"

#include <cmath>

#include "fpm/errors.hpp"

namespace fpm::stats {

namespace {

// Series expansion of P(a,x), valid and fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw DomainError("regularized_gamma_p: bad arguments");
  if (x == 0.0) return 0.0;
  return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw DomainError("regularized_gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_sf(double stat, int dof) {
  if (dof < 1) throw DomainError("chi_square_sf: dof must be >= 1");
  return regularized_gamma_q(0.5 * dof, 0.5 * stat);
}

GofResult chi_square_gof(const std::vector<long>& observed,
                         const std::vector<double>& probs, double min_expected) {
  if (observed.size() != probs.size() || observed.empty()) {
    throw DomainError("chi_square_gof: size mismatch");
  }
  double n = 0.0;
  for (long o : observed) n += double(o);

  // Merge low-expectation cells left to right so every cell used in the
  // statistic has expected count >= min_expected.
  std::vector<double> merged_exp;
  std::vector<double> merged_obs;
  double acc_e = 0.0, acc_o = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    acc_e += n * probs[i];
    acc_o += double(observed[i]);
    if (acc_e >= min_expected) {
      merged_exp.push_back(acc_e);
      merged_obs.push_back(acc_o);
      acc_e = acc_o = 0.0;
    }
  }
  if (acc_e > 0.0 && !merged_exp.empty()) {
    merged_exp.back() += acc_e;
    merged_obs.back() += acc_o;
  }
  if (merged_exp.size() < 2) throw DomainError("chi_square_gof: too few usable cells");

  GofResult r;
  for (std::size_t i = 0; i < merged_exp.size(); ++i) {
    const double d = merged_obs[i] - merged_exp[i];
    r.stat += d * d / merged_exp[i];
  }
  r.dof = static_cast<int>(merged_exp.size()) - 1;
  r.p_value = chi_square_sf(r.stat, r.dof);
  return r;
}

MeanSe mean_se(const std::vector<double>& xs) {
  if (xs.empty()) throw DomainError("mean_se: empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  const double mean = s / double(xs.size());
  double v = 0.0;
  for (double x : xs) v += (x - mean) * (x - mean);
  v /= double(xs.size());
  return {mean, std::sqrt(v / double(xs.size()))};
}

}  // namespace fpm::stats
