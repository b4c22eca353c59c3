#ifndef FPM_FPM1D_HPP
#define FPM_FPM1D_HPP

#include <complex>
#include <vector>

#include "fpm/rng.hpp"
#include "fpm/specfun.hpp"

namespace fpm::fpm1d {

/// Parameter bundle of the scalar fractional Poisson law pi_{lambda,beta}.
struct Fpm1D {
  double lambda;
  specfun::Beta beta;
  Fpm1D(double lambda_, specfun::Beta beta_) : lambda(lambda_), beta(beta_) {
    if (!(lambda > 0.0)) throw DomainError("Fpm1D: lambda must be > 0");
  }
};

/// Monic polynomial c_0 + c_1 x + ... + x^n (leading coefficient 1).
struct MonicPolynomial {
  std::vector<double> coeffs;  // degree = coeffs.size() - 1
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval(double x) const {
    double acc = 0.0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
  }
};

/// pmf(k) = lambda^k / k! * E_beta^{(k)}(-lambda). Computed through the
/// log form so large k cannot overflow.
double pmf(const Fpm1D& d, int k, const specfun::PrecisionBudget& budget = {});

/// Laplace transform E_beta(lambda (e^z - 1)).
std::complex<double> laplace(const Fpm1D& d, std::complex<double> z,
                             const specfun::PrecisionBudget& budget = {});

/// n-th moment: sum_{m<=n} m!/Gamma(m beta + 1) S(n,m) lambda^m.
double moment(const Fpm1D& d, int n);

/// Smallest K such that sum_{k>K} pmf(k) <= eps, from the exponential
/// Markov bound P(X >= K) <= E[e^{sX}] e^{-sK} optimized over s; the
/// moment generating function E[e^{sX}] = E_beta(lambda(e^s - 1)) is
/// evaluated in log scale (all series terms positive).
long tail_cutoff(const Fpm1D& d, double eps);

/// Monic orthogonal polynomials C_0..C_n_max of the moment functional,
/// by Gram-Schmidt on the monomials with exact moment inner products.
/// Throws IllConditionedGram when the Hankel pivots degrade past 1e12.
std::vector<MonicPolynomial> orthogonal_polys(const Fpm1D& d, int n_max);

/// Inner product (p, q) = sum over the moment functional.
double poly_inner(const Fpm1D& d, const MonicPolynomial& p, const MonicPolynomial& q);

/// Mixture draw: tau ~ nu_beta, then k ~ Poisson(lambda tau).
long sample(const Fpm1D& d, Rng& rng);

}  // namespace fpm::fpm1d

#endif
