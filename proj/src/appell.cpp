#include "fpm/appell.hpp"

#include <cmath>

namespace fpm::appell {

namespace {

using series::GradedSeries;

std::vector<cplx> mittag_leffler_coeffs(double beta, int order) {
  // 1 / Gamma(beta p + 1), p = 0..order.
  std::vector<cplx> a(order + 1);
  for (int p = 0; p <= order; ++p) a[p] = specfun::reciprocal_gamma(beta * p + 1.0);
  return a;
}

std::vector<cplx> to_cplx(const std::vector<double>& v) {
  return std::vector<cplx>(v.begin(), v.end());
}

/// Coefficients of e^u - 1 (index d = 1..order): 1/d!.
std::vector<cplx> expm1_coeffs(int order) {
  std::vector<cplx> c(order);
  double f = 1.0;
  for (int d = 1; d <= order; ++d) {
    f *= d;
    c[d - 1] = 1.0 / f;
  }
  return c;
}

/// Coefficients of log(1 + u) (index d = 1..order): (-1)^{d+1}/d.
std::vector<cplx> log1p_coeffs(int order) {
  std::vector<cplx> c(order);
  for (int d = 1; d <= order; ++d) c[d - 1] = ((d % 2) ? 1.0 : -1.0) / double(d);
  return c;
}

std::vector<SymTensor<cplx>> scaled_coefficients(const GradedSeries<cplx>& s) {
  std::vector<SymTensor<cplx>> out;
  out.reserve(s.order + 1);
  double nf = 1.0;
  for (int n = 0; n <= s.order; ++n) {
    if (n > 0) nf *= n;
    out.push_back(s.c[n] * cplx(nf));
  }
  return out;
}

}  // namespace

std::vector<SymTensor<cplx>> moment_kernels(const DiscretizedIntensity& sigma,
                                            specfun::Beta beta, int order) {
  const auto weights = to_cplx(sigma.masses);
  const auto inner = series::diagonal_series<cplx>(order, weights, expm1_coeffs(order));
  const auto l = series::compose_power_series(mittag_leffler_coeffs(beta.value, order), inner);
  return scaled_coefficients(l);
}

std::vector<SymTensor<cplx>> moment_kernels_alpha(const DiscretizedIntensity& sigma,
                                                  specfun::Beta beta, int order) {
  const auto weights = to_cplx(sigma.masses);
  const auto inner = series::linear_series<cplx>(order, weights);
  const auto l = series::compose_power_series(mittag_leffler_coeffs(beta.value, order), inner);
  return scaled_coefficients(l);
}

KernelSet build_kernel_set(const DiscretizedIntensity& sigma, specfun::Beta beta,
                           int order) {
  if (order < 0) throw DomainError("build_kernel_set: order must be >= 0");
  KernelSet ks;
  ks.bins = sigma.bins();
  ks.order = order;
  ks.beta = beta.value;
  ks.sigma = sigma.masses;

  const auto weights = to_cplx(sigma.masses);
  const auto ml = mittag_leffler_coeffs(beta.value, order);

  const auto l_series = series::compose_power_series(
      ml, series::diagonal_series<cplx>(order, weights, expm1_coeffs(order)));
  const auto l_alpha_series =
      series::compose_power_series(ml, series::linear_series<cplx>(order, weights));

  ks.recip_l = series::series_recip(l_series);
  ks.recip_l_alpha = series::series_recip(l_alpha_series);

  ks.moment = scaled_coefficients(l_series);
  ks.moment_alpha = scaled_coefficients(l_alpha_series);
  ks.c_at_zero = scaled_coefficients(ks.recip_l_alpha);
  ks.p_at_zero = scaled_coefficients(ks.recip_l);
  return ks;
}

std::vector<SymTensor<cplx>> c_kernels(const KernelSet& ks, const std::vector<cplx>& w) {
  if (static_cast<int>(w.size()) != ks.bins) throw DomainError("c_kernels: bad w size");
  const auto numer = series::series_exp(
      series::diagonal_series<cplx>(ks.order, w, log1p_coeffs(ks.order)));
  return scaled_coefficients(series::mul(numer, ks.recip_l_alpha));
}

std::vector<SymTensor<cplx>> p_kernels(const KernelSet& ks, const std::vector<cplx>& w) {
  if (static_cast<int>(w.size()) != ks.bins) throw DomainError("p_kernels: bad w size");
  const auto numer = series::series_exp(series::linear_series<cplx>(ks.order, w));
  return scaled_coefficients(series::mul(numer, ks.recip_l));
}

}  // namespace fpm::appell
