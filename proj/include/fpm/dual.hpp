#ifndef FPM_DUAL_HPP
#define FPM_DUAL_HPP

#include <complex>
#include <vector>

#include "fpm/appell.hpp"

namespace fpm::dual {

using appell::cplx;
using appell::KernelSet;
using tensor::SymTensor;

/// Polynomial functional in the monomial basis:
///   p(w) = sum_n <w^{x n}, coeff[n]>.
struct PolynomialFunctional {
  int bins = 1;
  std::vector<SymTensor<cplx>> coeff;  // degree 0..M, test side

  PolynomialFunctional() = default;
  PolynomialFunctional(int bins_, int degree)
      : bins(bins_) {
    coeff.reserve(degree + 1);
    for (int n = 0; n <= degree; ++n) coeff.emplace_back(bins_, n);
  }
  int degree() const { return static_cast<int>(coeff.size()) - 1; }

  cplx evaluate(const std::vector<cplx>& w) const {
    cplx acc = 0.0;
    for (int n = 0; n <= degree(); ++n) {
      acc += tensor::pair(SymTensor<cplx>::product_power(w, n), coeff[n]);
    }
    return acc;
  }
};

/// Distribution presented by its dual-kernel sequence
/// Phi ~ (Phi^{(0)}, ..., Phi^{(M)}).
struct QDistribution {
  int bins = 1;
  std::vector<SymTensor<cplx>> kernel;  // degree 0..M, dual side
};

/// Lowering operator: on the degree-m coefficient,
///   D(Phi^{(n)}): coeff[m] -> m!/(m-n)! contract(coeff[m], Phi^{(n)})
/// placed at degree m-n; degrees below n are annihilated.
PolynomialFunctional d_operator(const SymTensor<cplx>& phi_n,
                                const PolynomialFunctional& p);

/// G(Phi^{(n)}) p = sum_{k=n}^{deg p} (n!/k!) D(S_op(k,n)^* Phi^{(n)}) p.
PolynomialFunctional g_operator(const SymTensor<cplx>& phi_n,
                                const PolynomialFunctional& p);

/// Exact expectation under the measure: sum_n <M_n, coeff[n]>.
cplx expectation(const PolynomialFunctional& p, const KernelSet& ks);

/// Dual-system pairing <<Q_n(Phi), p>> = E[G(Phi^{(n)}) p].
cplx q_pairing(int n, const SymTensor<cplx>& phi_n, const PolynomialFunctional& p,
               const KernelSet& ks);

/// Monomial coefficients of w -> sum over the generalized Appell basis
/// coefficients cb[m] (i.e. p(w) = sum_m <C_m(w), cb[m]>), through the
/// finite shift decomposition of C_m into C_k(0) and first-kind Stirling
/// images of the monomials.
PolynomialFunctional c_basis_to_monomial(const std::vector<SymTensor<cplx>>& cb,
                                         const KernelSet& ks);

/// Inverse conversion: generalized-Appell-basis coefficients of a
/// monomial-basis polynomial, through the moment-kernel reconstruction of
/// w^{x n}.
std::vector<SymTensor<cplx>> monomial_to_c_basis(const PolynomialFunctional& p,
                                                 const KernelSet& ks);

/// Same decomposition for the plain Appell kernels P_m: monomial
/// coefficients of w -> sum_m <P_m(w), pb[m]>.
PolynomialFunctional p_basis_to_monomial(const std::vector<SymTensor<cplx>>& pb,
                                         const KernelSet& ks);

/// S-transform of a distribution at the vector phi:
///   sum_n <Phi^{(n)}, (e^phi - 1)^{x n}>  (componentwise e^phi - 1).
cplx s_transform(const QDistribution& dist, const std::vector<cplx>& phi);

/// Convolution value of a C-basis polynomial at w:
///   sum_n <(-w)_n, cb[n]>.
cplx convolution(const std::vector<SymTensor<cplx>>& cb, const std::vector<cplx>& w);

/// The same value through the first-kind Stirling rewrite
///   sum_n sum_k (-1)^k <w^{x k}, s_op(n,k) cb[n]>.
cplx convolution_stirling(const std::vector<SymTensor<cplx>>& cb,
                          const std::vector<cplx>& w);

/// Pairing with the evaluation distribution at w: sum_n <C_n(w), cb[n]>,
/// i.e. the polynomial's value at w.
cplx delta_pairing(const std::vector<cplx>& w, const std::vector<SymTensor<cplx>>& cb,
                   const KernelSet& ks);

/// Pairing with the shifted Radon-Nikodym distribution, realized through
/// its dual-kernel expansion sum_k Q_k((shift)_k)/k!. For a C-basis
/// polynomial this returns sum_n <(shift)_n, cb[n]>.
cplx rnd_pairing(const std::vector<cplx>& shift, const PolynomialFunctional& p,
                 const KernelSet& ks);

/// Squared norm series of the normalized exponential in the smoothness
/// scale: sum_n (n!)^{kappa-1} t^n. kappa = 0 gives exp(t) in closed form;
/// kappa = 1 is geometric: finite iff t < 1, +infinity otherwise.
double wick_norm_sq(double t, double kappa, int max_terms = 400);

/// Truncated normalized exponential e(phi; .) = exp(<., phi>)/l(phi) as a
/// monomial-basis polynomial of the given degree (the natural test vector
/// for the S-transform route).
PolynomialFunctional truncated_wick_exponential(const std::vector<cplx>& phi,
                                                const KernelSet& ks, int degree);

}  // namespace fpm::dual

#endif
