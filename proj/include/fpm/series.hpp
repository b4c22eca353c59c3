#ifndef FPM_SERIES_HPP
#define FPM_SERIES_HPP

#include <vector>

#include "fpm/tensor.hpp"

namespace fpm::series {

using tensor::SymTensor;

/// Truncated formal power series in a vector variable phi: the value is
///   s(phi) = sum_{n<=order} <c_n, phi^{x n}>,
/// one symmetric tensor per degree. Products of values correspond to
/// symmetrized products of coefficients, which makes this the coefficient
/// extractor for every generating function in the project.
template <class T>
struct GradedSeries {
  int bins = 1;
  int order = 0;
  std::vector<SymTensor<T>> c;  // degree 0..order

  GradedSeries() = default;
  GradedSeries(int bins_, int order_) : bins(bins_), order(order_) {
    c.reserve(order + 1);
    for (int n = 0; n <= order; ++n) c.emplace_back(bins, n);
  }

  T value_at(const std::vector<T>& phi) const {
    T acc{};
    for (int n = 0; n <= order; ++n) {
      acc += tensor::pair(c[n], SymTensor<T>::product_power(phi, n));
    }
    return acc;
  }
};

/// Constant series.
template <class T>
GradedSeries<T> constant_series(int bins, int order, T value) {
  GradedSeries<T> s(bins, order);
  s.c[0][0] = value;
  return s;
}

/// Degree-1 series phi -> <v, phi>.
template <class T>
GradedSeries<T> linear_series(int order, const std::vector<T>& v) {
  GradedSeries<T> s(static_cast<int>(v.size()), order);
  if (order >= 1) {
    for (std::size_t j = 0; j < v.size(); ++j) s.c[1][static_cast<int>(j)] = v[j];
  }
  return s;
}

/// Componentwise scalar series with per-bin weights:
///   phi -> sum_j weights_j * sum_{d>=1} coeff_d phi_j^d.
/// Coefficient tensors are diagonal: entry coeff_d * weights_j at (j,...,j).
template <class T>
GradedSeries<T> diagonal_series(int order, const std::vector<T>& weights,
                                const std::vector<T>& coeff /* index d = 1..order */) {
  const int bins = static_cast<int>(weights.size());
  GradedSeries<T> s(bins, order);
  for (int d = 1; d <= order; ++d) {
    const tensor::Layout& lay = tensor::Layout::get(bins, d);
    for (int j = 0; j < bins; ++j) {
      std::vector<int> counts(bins, 0);
      counts[j] = d;
      s.c[d][lay.rank(counts)] = weights[j] * coeff[d - 1];
    }
  }
  return s;
}

template <class T>
GradedSeries<T> add(const GradedSeries<T>& a, const GradedSeries<T>& b) {
  GradedSeries<T> out(a.bins, std::min(a.order, b.order));
  for (int n = 0; n <= out.order; ++n) out.c[n] = a.c[n] + b.c[n];
  return out;
}

/// Truncated product (Cauchy convolution through symmetrized products).
template <class T>
GradedSeries<T> mul(const GradedSeries<T>& a, const GradedSeries<T>& b) {
  GradedSeries<T> out(a.bins, std::min(a.order, b.order));
  for (int n = 0; n <= out.order; ++n) {
    for (int i = 0; i <= n; ++i) {
      out.c[n] += tensor::sym_product(a.c[i], b.c[n - i]);
    }
  }
  return out;
}

/// exp of a series with zero constant term, by the degree recurrence
///   n E_n = sum_{k=1..n} k S_k sym E_{n-k},  E_0 = 1.
template <class T>
GradedSeries<T> series_exp(const GradedSeries<T>& s) {
  if (!(s.c[0][0] == T{})) throw DomainError("series_exp: constant term must be 0");
  GradedSeries<T> e(s.bins, s.order);
  e.c[0][0] = tensor::from_int<T>(1);
  for (int n = 1; n <= s.order; ++n) {
    for (int k = 1; k <= n; ++k) {
      e.c[n] += tensor::from_int<T>(k) * tensor::sym_product(s.c[k], e.c[n - k]);
    }
    e.c[n] *= tensor::from_int<T>(1) / tensor::from_int<T>(n);
  }
  return e;
}

/// log(1 + s) for a series s with zero constant term:
///   L_n = s_n - (1/n) sum_{k=1..n-1} k L_k sym s_{n-k}.
template <class T>
GradedSeries<T> series_log1p(const GradedSeries<T>& s) {
  if (!(s.c[0][0] == T{})) throw DomainError("series_log1p: constant term must be 0");
  GradedSeries<T> l(s.bins, s.order);
  for (int n = 1; n <= s.order; ++n) {
    SymTensor<T> acc(s.bins, n);
    for (int k = 1; k <= n - 1; ++k) {
      acc += tensor::from_int<T>(k) * tensor::sym_product(l.c[k], s.c[n - k]);
    }
    l.c[n] = s.c[n] - acc * (tensor::from_int<T>(1) / tensor::from_int<T>(n));
  }
  return l;
}

/// 1 / s for a series with nonzero constant term:
///   R_0 = 1/s_0,  R_n = -(1/s_0) sum_{k=1..n} s_k sym R_{n-k}.
template <class T>
GradedSeries<T> series_recip(const GradedSeries<T>& s) {
  if (s.c[0][0] == T{}) throw DomainError("series_recip: constant term must be nonzero");
  GradedSeries<T> r(s.bins, s.order);
  const T inv0 = tensor::from_int<T>(1) / s.c[0][0];
  r.c[0][0] = inv0;
  for (int n = 1; n <= s.order; ++n) {
    SymTensor<T> acc(s.bins, n);
    for (int k = 1; k <= n; ++k) {
      acc += tensor::sym_product(s.c[k], r.c[n - k]);
    }
    r.c[n] = acc * (T{} - inv0);
  }
  return r;
}

/// Composition with a scalar power series: f(s) with f(u) = sum_p a_p u^p,
/// Horner ladder on the graded algebra. Requires s to have zero constant
/// term so the truncation is exact.
template <class T>
GradedSeries<T> compose_power_series(const std::vector<T>& a, const GradedSeries<T>& s) {
  if (!(s.c[0][0] == T{})) {
    throw DomainError("compose_power_series: inner constant term must be 0");
  }
  const int order = s.order;
  GradedSeries<T> acc = constant_series(s.bins, order, a.empty() ? T{} : a.back());
  for (int p = static_cast<int>(a.size()) - 2; p >= 0; --p) {
    acc = mul(acc, s);
    acc.c[0][0] += a[p];
  }
  return acc;
}

}  // namespace fpm::series

#endif
