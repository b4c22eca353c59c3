#ifndef FPM_FPM2D_HPP
#define FPM_FPM2D_HPP

#include <vector>

#include "fpm/fpm1d.hpp"

namespace fpm::fpm2d {

/// Bivariate fractional Poisson law: one Mittag-Leffler weight shared by
/// both coordinates (which is exactly what breaks cross-orthogonality for
/// beta < 1).
struct Fpm2D {
  double lambda1;
  double lambda2;
  specfun::Beta beta;
  Fpm2D(double l1, double l2, specfun::Beta b) : lambda1(l1), lambda2(l2), beta(b) {
    if (!(l1 > 0.0) || !(l2 > 0.0)) throw DomainError("Fpm2D: rates must be > 0");
  }
};

/// Joint Laplace transform E_beta(lambda1(e^{s1}-1) + lambda2(e^{s2}-1)).
double laplace2(const Fpm2D& d, double s1, double s2,
                const specfun::PrecisionBudget& budget = {});

/// Joint moment m2(n1, n2) =
///   sum_{m1<=n1, m2<=n2} (m1+m2)!/Gamma((m1+m2) beta + 1)
///                        S(n1,m1) S(n2,m2) lambda1^{m1} lambda2^{m2}.
/// At beta = 1 the coordinates are independent Poissons and the moment
/// factorizes; that branch is computed as the explicit product.
double moment2(const Fpm2D& d, int n1, int n2);

/// Gram-Schmidt shape coefficient A(beta, lambda) =
/// (m3 - m1 m2) / (m2 - m1^2) of the degree-2 monic polynomial.
double a_coefficient(specfun::Beta beta, double lambda);

/// Cross pairing of C_1 (rate lambda1) against C_2 (rate lambda2) under
/// the joint law; zero exactly when beta = 1 (computed on the factorized
/// branch there so the zero is crisp).
double f_function(specfun::Beta beta, double lambda1, double lambda2);

struct FRow {
  double beta;
  double lambda1;
  double lambda2;
  double f;
};

/// Sweep of f_function over a beta grid for a list of rate pairs.
/// Grid points within 1e-9 of 1 are snapped onto the exact Poisson branch.
std::vector<FRow> f_sweep(double beta_start, double beta_end, double beta_step,
                          const std::vector<std::pair<double, double>>& pairs);

}  // namespace fpm::fpm2d

#endif
