#include "fpm/fpm2d.hpp"

#include <cmath>

#include "fpm/stirling.hpp"

namespace fpm::fpm2d {

double laplace2(const Fpm2D& d, double s1, double s2,
                const specfun::PrecisionBudget& budget) {
  const double arg = d.lambda1 * std::expm1(s1) + d.lambda2 * std::expm1(s2);
  return specfun::ml_derivative(d.beta, 0, arg, budget);
}

double moment2(const Fpm2D& d, int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw DomainError("moment2: orders must be >= 0");
  if (d.beta.value == 1.0) {
    return fpm1d::moment({d.lambda1, d.beta}, n1) * fpm1d::moment({d.lambda2, d.beta}, n2);
  }
  static const stirling::StirlingTable table(20);
  if (n1 > table.n_max() || n2 > table.n_max()) {
    throw DomainError("moment2: order beyond the supported table");
  }
  double acc = 0.0;
  double pow1 = 1.0;
  for (int m1 = 0; m1 <= n1; ++m1) {
    double pow2 = 1.0;
    for (int m2 = 0; m2 <= n2; ++m2) {
      const long long s = table.s2(n1, m1) * table.s2(n2, m2);
      if (s != 0) {
        const double fact = std::exp(std::lgamma(double(m1 + m2) + 1.0));
        acc += fact * specfun::reciprocal_gamma((m1 + m2) * d.beta.value + 1.0) *
               static_cast<double>(s) * pow1 * pow2;
      }
      pow2 *= d.lambda2;
    }
    pow1 *= d.lambda1;
  }
  return acc;
}

double a_coefficient(specfun::Beta beta, double lambda) {
  const fpm1d::Fpm1D d{lambda, beta};
  const double m1 = fpm1d::moment(d, 1);
  const double m2 = fpm1d::moment(d, 2);
  const double m3 = fpm1d::moment(d, 3);
  return (m3 - m1 * m2) / (m2 - m1 * m1);
}

double f_function(specfun::Beta beta, double lambda1, double lambda2) {
  const Fpm2D joint{lambda1, lambda2, beta};
  const fpm1d::Fpm1D d1{lambda1, beta};
  const fpm1d::Fpm1D d2{lambda2, beta};
  const double a = a_coefficient(beta, lambda2);
  // E[C_1(x1) C_2(x2)] through joint and marginal moments, grouped into the
  // two covariance-like differences. On the beta = 1 branch moment2
  // factorizes term by term, so each difference cancels exactly in floating
  // point and the endpoint zero is crisp.
  const double cov12 = moment2(joint, 1, 2) - fpm1d::moment(d1, 1) * fpm1d::moment(d2, 2);
  const double cov11 = moment2(joint, 1, 1) - fpm1d::moment(d1, 1) * fpm1d::moment(d2, 1);
  return cov12 - a * cov11;
}

std::vector<FRow> f_sweep(double beta_start, double beta_end, double beta_step,
                          const std::vector<std::pair<double, double>>& pairs) {
  if (!(beta_step > 0.0) || beta_end < beta_start) {
    throw DomainError("f_sweep: bad beta grid");
  }
  const int n_steps = static_cast<int>(std::lround((beta_end - beta_start) / beta_step));
  std::vector<FRow> rows;
  rows.reserve(static_cast<std::size_t>(n_steps + 1) * pairs.size());
  for (const auto& [l1, l2] : pairs) {
    for (int i = 0; i <= n_steps; ++i) {
      double b = beta_start + i * beta_step;
      if (std::abs(b - 1.0) < 1e-9) b = 1.0;
      rows.push_back({b, l1, l2, f_function(specfun::Beta(b), l1, l2)});
    }
  }
  return rows;
}

}  // namespace fpm::fpm2d
