#include "fpm/dual.hpp"

#include <cmath>
#include <limits>

#include "fpm/stirling.hpp"

namespace fpm::dual {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

PolynomialFunctional d_operator(const SymTensor<cplx>& phi_n,
                                const PolynomialFunctional& p) {
  const int n = phi_n.degree();
  const int deg = p.degree();
  PolynomialFunctional out(p.bins, std::max(deg - n, 0));
  for (int m = n; m <= deg; ++m) {
    const double scale = factorial(m) / factorial(m - n);
    out.coeff[m - n] += cplx(scale) * tensor::contract_dual(p.coeff[m], phi_n);
  }
  return out;
}

PolynomialFunctional g_operator(const SymTensor<cplx>& phi_n,
                                const PolynomialFunctional& p) {
  const int n = phi_n.degree();
  const int deg = p.degree();
  PolynomialFunctional out(p.bins, std::max(deg - n, 0));
  for (int k = n; k <= deg; ++k) {
    const SymTensor<cplx> lifted = stirling::stirling_op2_adjoint(k, n, phi_n);
    const PolynomialFunctional piece = d_operator(lifted, p);
    const cplx scale = factorial(n) / factorial(k);
    for (int d = 0; d <= piece.degree(); ++d) out.coeff[d] += scale * piece.coeff[d];
  }
  return out;
}

cplx expectation(const PolynomialFunctional& p, const KernelSet& ks) {
  if (p.degree() > ks.order) {
    throw DomainError("expectation: kernel set order below polynomial degree");
  }
  cplx acc = 0.0;
  for (int n = 0; n <= p.degree(); ++n) acc += tensor::pair(ks.moment[n], p.coeff[n]);
  return acc;
}

cplx q_pairing(int n, const SymTensor<cplx>& phi_n, const PolynomialFunctional& p,
               const KernelSet& ks) {
  if (phi_n.degree() != n) throw DomainError("q_pairing: kernel degree mismatch");
  return expectation(g_operator(phi_n, p), ks);
}

PolynomialFunctional c_basis_to_monomial(const std::vector<SymTensor<cplx>>& cb,
                                         const KernelSet& ks) {
  const int deg = static_cast<int>(cb.size()) - 1;
  PolynomialFunctional out(ks.bins, deg);
  for (int m = 0; m <= deg; ++m) {
    // C_m(w) = sum_k binom(m,k) sum_i C_k(0) sym (s_op(m-k,i)^* w^{x i}).
    for (int k = 0; k <= m; ++k) {
      const SymTensor<cplx> reduced = tensor::contract_dual(cb[m], ks.c_at_zero[k]);
      const int r = m - k;  // degree left for the monomial part
      for (int i = (r == 0 ? 0 : 1); i <= r; ++i) {
        out.coeff[i] +=
            cplx(binomial(m, k)) * stirling::stirling_op1(r, i, reduced);
      }
    }
  }
  return out;
}

PolynomialFunctional p_basis_to_monomial(const std::vector<SymTensor<cplx>>& pb,
                                         const KernelSet& ks) {
  const int deg = static_cast<int>(pb.size()) - 1;
  PolynomialFunctional out(ks.bins, deg);
  for (int m = 0; m <= deg; ++m) {
    // P_m(w) = sum_k binom(m,k) P_k(0) sym w^{x(m-k)}.
    for (int k = 0; k <= m; ++k) {
      out.coeff[m - k] +=
          cplx(binomial(m, k)) * tensor::contract_dual(pb[m], ks.p_at_zero[k]);
    }
  }
  return out;
}

std::vector<SymTensor<cplx>> monomial_to_c_basis(const PolynomialFunctional& p,
                                                 const KernelSet& ks) {
  const int deg = p.degree();
  if (deg > ks.order) throw DomainError("monomial_to_c_basis: order too low");
  std::vector<SymTensor<cplx>> out;
  out.reserve(deg + 1);
  for (int j = 0; j <= deg; ++j) out.emplace_back(ks.bins, j);
  for (int n = 0; n <= deg; ++n) {
    // w^{x n} = sum_{k<=n} binom(n,k) sum_{j<=k} S_op(k,j)^* C_j(w) sym M_{n-k}.
    for (int k = 0; k <= n; ++k) {
      const SymTensor<cplx> reduced = tensor::contract_dual(p.coeff[n], ks.moment[n - k]);
      for (int j = (k == 0 ? 0 : 1); j <= k; ++j) {
        out[j] += cplx(binomial(n, k)) * stirling::stirling_op2(k, j, reduced);
      }
    }
  }
  return out;
}

cplx s_transform(const QDistribution& dist, const std::vector<cplx>& phi) {
  std::vector<cplx> g(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) g[j] = std::exp(phi[j]) - 1.0;
  cplx acc = 0.0;
  for (std::size_t n = 0; n < dist.kernel.size(); ++n) {
    acc += tensor::pair(dist.kernel[n],
                        SymTensor<cplx>::product_power(g, static_cast<int>(n)));
  }
  return acc;
}

cplx convolution(const std::vector<SymTensor<cplx>>& cb, const std::vector<cplx>& w) {
  std::vector<cplx> neg(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) neg[j] = -w[j];
  cplx acc = 0.0;
  for (std::size_t n = 0; n < cb.size(); ++n) {
    acc += tensor::pair(stirling::falling_factorial(neg, static_cast<int>(n)), cb[n]);
  }
  return acc;
}

cplx convolution_stirling(const std::vector<SymTensor<cplx>>& cb,
                          const std::vector<cplx>& w) {
  cplx acc = 0.0;
  for (std::size_t n = 0; n < cb.size(); ++n) {
    const int nn = static_cast<int>(n);
    acc += (nn == 0) ? cb[0][0] : cplx(0.0);
    for (int k = 1; k <= nn; ++k) {
      const double sgn = (k % 2) ? -1.0 : 1.0;
      acc += cplx(sgn) * tensor::pair(SymTensor<cplx>::product_power(w, k),
                                      stirling::stirling_op1(nn, k, cb[n]));
    }
  }
  return acc;
}

cplx delta_pairing(const std::vector<cplx>& w, const std::vector<SymTensor<cplx>>& cb,
                   const KernelSet& ks) {
  const auto c_at_w = appell::c_kernels(ks, w);
  cplx acc = 0.0;
  for (std::size_t n = 0; n < cb.size(); ++n) {
    acc += tensor::pair(c_at_w[n], cb[n]);
  }
  return acc;
}

cplx rnd_pairing(const std::vector<cplx>& shift, const PolynomialFunctional& p,
                 const KernelSet& ks) {
  cplx acc = 0.0;
  for (int k = 0; k <= p.degree(); ++k) {
    const SymTensor<cplx> ff = stirling::falling_factorial(shift, k);
    acc += q_pairing(k, ff, p, ks) / cplx(factorial(k));
  }
  return acc;
}

double wick_norm_sq(double t, double kappa, int max_terms) {
  if (t < 0.0 || kappa < 0.0 || kappa > 1.0) {
    throw DomainError("wick_norm_sq: need t >= 0 and kappa in [0, 1]");
  }
  if (kappa == 0.0) return std::exp(t);
  if (kappa == 1.0) {
    if (t >= 1.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (1.0 - t);
  }
  // sum_n (n!)^{kappa-1} t^n converges for every t when kappa < 1.
  double acc = 0.0;
  double log_nf = 0.0;
  for (int n = 0; n < max_terms; ++n) {
    if (n > 0) log_nf += std::log(double(n));
    const double term = std::exp((kappa - 1.0) * log_nf + n * std::log(t > 0 ? t : 1.0)) *
                        ((t == 0.0 && n > 0) ? 0.0 : 1.0);
    acc += term;
    if (n > 2 && term < 1e-17 * acc) break;
  }
  return acc;
}

PolynomialFunctional truncated_wick_exponential(const std::vector<cplx>& phi,
                                                const KernelSet& ks, int degree) {
  // exp(<w, phi>)/l(phi): monomial coefficients phi^{x p} / (p! l(phi)).
  std::complex<double> arg = 0.0;
  for (int j = 0; j < ks.bins; ++j) arg += ks.sigma[j] * (std::exp(phi[j]) - 1.0);
  const cplx l = specfun::mittag_leffler(specfun::Beta(ks.beta), arg);
  PolynomialFunctional out(ks.bins, degree);
  for (int p = 0; p <= degree; ++p) {
    out.coeff[p] = SymTensor<cplx>::product_power(phi, p) * (1.0 / (factorial(p) * l));
  }
  return out;
}

}  // namespace fpm::dual
