#ifndef FPM_APPELL_HPP
#define FPM_APPELL_HPP

#include <complex>
#include <vector>

#include "fpm/series.hpp"
#include "fpm/specfun.hpp"

namespace fpm::appell {

using cplx = std::complex<double>;
using tensor::SymTensor;

/// Bin masses of the discretized intensity: sigma_j > 0 per bin.
struct DiscretizedIntensity {
  std::vector<double> masses;
  explicit DiscretizedIntensity(std::vector<double> m) : masses(std::move(m)) {
    if (masses.empty()) throw DomainError("DiscretizedIntensity: need >= 1 bin");
    for (double s : masses) {
      if (!(s > 0.0)) throw DomainError("DiscretizedIntensity: masses must be > 0");
    }
  }
  int bins() const { return static_cast<int>(masses.size()); }
  double total() const {
    double t = 0.0;
    for (double s : masses) t += s;
    return t;
  }
};

/// All kernels are extracted from one graded-series pipeline built on the
/// Laplace functional l(phi) = E_beta(sum_j sigma_j (e^{phi_j} - 1)) and
/// its log-shifted variant l(log(1+phi)) = E_beta(sum_j sigma_j phi_j).
/// Closed forms exist for some kernels and are used only as cross-checks
/// in the tests, never as the production path.
struct KernelSet {
  int bins = 1;
  int order = 0;
  double beta = 1.0;
  std::vector<double> sigma;

  std::vector<SymTensor<cplx>> moment;        // M_n
  std::vector<SymTensor<cplx>> moment_alpha;  // M_n with the log(1+.) shift
  std::vector<SymTensor<cplx>> c_at_zero;     // C_n(0)
  std::vector<SymTensor<cplx>> p_at_zero;     // P_n(0)

  series::GradedSeries<cplx> recip_l;        // 1 / E_beta(sum sigma (e^phi - 1))
  series::GradedSeries<cplx> recip_l_alpha;  // 1 / E_beta(sum sigma phi)
};

/// Build the kernel set for a given intensity, order and beta.
KernelSet build_kernel_set(const DiscretizedIntensity& sigma, specfun::Beta beta,
                           int order);

/// Moment kernels M_0..M_N: n! times the degree-n coefficients of
/// E_beta(sum_j sigma_j (e^{phi_j} - 1)).
std::vector<SymTensor<cplx>> moment_kernels(const DiscretizedIntensity& sigma,
                                            specfun::Beta beta, int order);

/// Shifted moment kernels M_0^a..M_N^a: coefficients of
/// E_beta(sum_j sigma_j phi_j); closed form (n!/Gamma(n beta + 1)) sigma^{x n}.
std::vector<SymTensor<cplx>> moment_kernels_alpha(const DiscretizedIntensity& sigma,
                                                  specfun::Beta beta, int order);

/// Generalized Appell kernels C_0(w)..C_N(w): n! times the coefficients of
/// exp(sum_j w_j log(1 + phi_j)) / E_beta(sum_j sigma_j phi_j).
std::vector<SymTensor<cplx>> c_kernels(const KernelSet& ks, const std::vector<cplx>& w);

/// Appell kernels P_0(w)..P_N(w): n! times the coefficients of
/// exp(<w, phi>) / E_beta(sum_j sigma_j (e^{phi_j} - 1)).
std::vector<SymTensor<cplx>> p_kernels(const KernelSet& ks, const std::vector<cplx>& w);

}  // namespace fpm::appell

#endif
