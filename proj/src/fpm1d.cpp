#include "fpm/fpm1d.hpp"

#include <cmath>

#include "fpm/stirling.hpp"

namespace fpm::fpm1d {

double pmf(const Fpm1D& d, int k, const specfun::PrecisionBudget& budget) {
  if (k < 0) throw DomainError("pmf: k must be >= 0");
  if (d.beta.value == 1.0) {
    return std::exp(k * std::log(d.lambda) - std::lgamma(double(k) + 1.0) - d.lambda);
  }
  const specfun::LogValue lv = specfun::ml_derivative_log(d.beta, k, -d.lambda, budget);
  const double log_pmf =
      k * std::log(d.lambda) - std::lgamma(double(k) + 1.0) + lv.log_value;
  return std::exp(log_pmf);
}

std::complex<double> laplace(const Fpm1D& d, std::complex<double> z,
                             const specfun::PrecisionBudget& budget) {
  const std::complex<double> arg = d.lambda * (std::exp(z) - 1.0);
  return specfun::mittag_leffler(d.beta, arg, budget);
}

double moment(const Fpm1D& d, int n) {
  if (n < 0) throw DomainError("moment: n must be >= 0");
  if (n == 0) return 1.0;
  static const stirling::StirlingTable table(20);
  if (n > table.n_max()) throw DomainError("moment: n beyond the supported table");
  double acc = 0.0;
  double lam_pow = 1.0;
  double m_fact = 1.0;
  for (int m = 1; m <= n; ++m) {
    lam_pow *= d.lambda;
    m_fact *= m;
    acc += m_fact * specfun::reciprocal_gamma(m * d.beta.value + 1.0) *
           static_cast<double>(table.s2(n, m)) * lam_pow;
  }
  return acc;
}

long tail_cutoff(const Fpm1D& d, double eps) {
  if (!(eps > 0.0)) throw DomainError("tail_cutoff: eps must be > 0");
  long best = -1;
  for (double s = 0.05; s <= 1.55; s += 0.05) {
    const double arg = d.lambda * std::expm1(s);
    const double log_mgf = specfun::log_mittag_leffler_pos(d.beta, arg);
    const double k = (log_mgf - std::log(eps)) / s;
    const long cand = static_cast<long>(std::ceil(std::max(k, 0.0)));
    if (best < 0 || cand < best) best = cand;
  }
  return best;
}

std::vector<MonicPolynomial> orthogonal_polys(const Fpm1D& d, int n_max) {
  if (n_max < 0) throw DomainError("orthogonal_polys: n_max must be >= 0");
  // Moments up to 2 n_max feed every inner product.
  std::vector<double> m(2 * n_max + 1);
  for (int i = 0; i <= 2 * n_max; ++i) m[i] = moment(d, i);

  auto inner_coeffs = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) acc += a[i] * b[j] * m[i + j];
    }
    return acc;
  };

  std::vector<MonicPolynomial> polys;
  std::vector<double> norms;  // (C_j, C_j)
  double max_pivot = 0.0, min_pivot = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;  // start from x^n
    for (int j = 0; j < n; ++j) {
      std::vector<double> xn(n + 1, 0.0);
      xn[n] = 1.0;
      const double proj = inner_coeffs(xn, polys[j].coeffs) / norms[j];
      for (int t = 0; t <= polys[j].degree(); ++t) c[t] -= proj * polys[j].coeffs[t];
    }
    const double nrm = inner_coeffs(c, c);
    if (n == 0) {
      max_pivot = min_pivot = nrm;
    } else {
      max_pivot = std::max(max_pivot, nrm);
      min_pivot = std::min(min_pivot, nrm);
    }
    if (!(nrm > 0.0) || max_pivot / nrm > 1e12) {
      throw IllConditionedGram("orthogonal_polys: moment Hankel matrix pivot collapse");
    }
    polys.push_back(MonicPolynomial{std::move(c)});
    norms.push_back(nrm);
  }
  return polys;
}

double poly_inner(const Fpm1D& d, const MonicPolynomial& p, const MonicPolynomial& q) {
  double acc = 0.0;
  for (int i = 0; i <= p.degree(); ++i) {
    for (int j = 0; j <= q.degree(); ++j) {
      acc += p.coeffs[i] * q.coeffs[j] * moment(d, i + j);
    }
  }
  return acc;
}

long sample(const Fpm1D& d, Rng& rng) {
  const double tau = specfun::sample_nu_beta(d.beta, rng);
  return rng.poisson(d.lambda * tau);
}

}  // namespace fpm::fpm1d
