#ifndef FPM_STIRLING_HPP
#define FPM_STIRLING_HPP

#include <vector>

#include "fpm/tensor.hpp"

namespace fpm::stirling {

using tensor::SymTensor;

/// Exact Stirling numbers of both kinds up to n_max, via the standard
/// recurrences. s(n,k) is signed. Overflow-checked against int64.
class StirlingTable {
public:
  explicit StirlingTable(int n_max);
  int n_max() const { return n_max_; }
  long long s1(int n, int k) const;  // first kind (signed)
  long long s2(int n, int k) const;  // second kind
private:
  int n_max_;
  std::vector<std::vector<long long>> s1_, s2_;
};

/// Ordered compositions of n into k positive parts, cached per (n, k).
const std::vector<std::vector<int>>& compositions(int n, int k);

namespace detail {
inline long long factorial_ll(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace detail

/// Stirling operator of the first kind on the test side, degree n -> k:
///   s_op(n,k) = (n!/k!) sum_{i_1+...+i_k=n} (-1)^{n-k} / (i_1 ... i_k) D_{i_1..i_k}.
/// For k = 0 this is the identity on scalars when n = 0 and zero otherwise.
template <class T>
SymTensor<T> stirling_op1(int n, int k, const SymTensor<T>& phi) {
  if (phi.degree() != n) throw DomainError("stirling_op1: degree mismatch");
  if (k == 0) {
    return n == 0 ? phi : SymTensor<T>::scalar_tensor(phi.bins(), T{});
  }
  SymTensor<T> out(phi.bins(), k);
  if (k > n) return out;
  const T lead = tensor::from_int<T>(detail::factorial_ll(n)) /
                 tensor::from_int<T>(detail::factorial_ll(k));
  const long long sgn = ((n - k) % 2 == 0) ? 1 : -1;
  for (const auto& comp : compositions(n, k)) {
    long long prod = 1;
    for (int part : comp) prod *= part;
    const T coeff = lead * (tensor::from_int<T>(sgn) / tensor::from_int<T>(prod));
    out += coeff * tensor::diag_restrict(comp, phi);
  }
  return out;
}

/// Stirling operator of the second kind on the test side, degree n -> k:
///   S_op(n,k) = (n!/k!) sum_{i_1+...+i_k=n} 1 / (i_1! ... i_k!) D_{i_1..i_k}.
template <class T>
SymTensor<T> stirling_op2(int n, int k, const SymTensor<T>& phi) {
  if (phi.degree() != n) throw DomainError("stirling_op2: degree mismatch");
  if (k == 0) {
    return n == 0 ? phi : SymTensor<T>::scalar_tensor(phi.bins(), T{});
  }
  SymTensor<T> out(phi.bins(), k);
  if (k > n) return out;
  const T lead = tensor::from_int<T>(detail::factorial_ll(n)) /
                 tensor::from_int<T>(detail::factorial_ll(k));
  for (const auto& comp : compositions(n, k)) {
    long long prod = 1;
    for (int part : comp) prod *= detail::factorial_ll(part);
    const T coeff = lead / tensor::from_int<T>(prod);
    out += coeff * tensor::diag_restrict(comp, phi);
  }
  return out;
}

/// Adjoint of a linear operator L : (test, deg n) -> (test, deg k) with
/// respect to the multiset-weighted pairing; maps dual-side degree k to
/// dual-side degree n:
///   (L* A)_mu = sum_nu mult_k(nu) A_nu (L e_mu)_nu / mult_n(mu).
template <class T, class Op>
SymTensor<T> adjoint_apply(int n, int k, const SymTensor<T>& dual, Op&& op) {
  if (dual.degree() != k) throw DomainError("adjoint_apply: degree mismatch");
  const int bins = dual.bins();
  SymTensor<T> out(bins, n);
  const tensor::Layout& ln = tensor::Layout::get(bins, n);
  const tensor::Layout& lk = tensor::Layout::get(bins, k);
  for (int i = 0; i < ln.size(); ++i) {
    const SymTensor<T> image = op(SymTensor<T>::basis(bins, n, i));
    T acc{};
    for (int j = 0; j < lk.size(); ++j) {
      acc += tensor::from_int<T>(lk.multiplicity(j)) * dual[j] * image[j];
    }
    out[i] = acc / tensor::from_int<T>(ln.multiplicity(i));
  }
  return out;
}

/// s_op(n,k)^* : dual degree k -> dual degree n.
template <class T>
SymTensor<T> stirling_op1_adjoint(int n, int k, const SymTensor<T>& dual) {
  return adjoint_apply(n, k, dual,
                       [&](const SymTensor<T>& e) { return stirling_op1(n, k, e); });
}

/// S_op(n,k)^* : dual degree k -> dual degree n.
template <class T>
SymTensor<T> stirling_op2_adjoint(int n, int k, const SymTensor<T>& dual) {
  return adjoint_apply(n, k, dual,
                       [&](const SymTensor<T>& e) { return stirling_op2(n, k, e); });
}

/// Falling factorial (w)_n on the dual side. In the bin reduction the
/// delta-recursion collapses to products of scalar falling factorials:
/// the entry at multiset mu is prod_j w_j (w_j - 1) ... (w_j - mu_j + 1).
/// Generating function: exp(<w, log(1+phi)>) = sum_n <(w)_n, phi^{x n}>/n!.
template <class T>
SymTensor<T> falling_factorial(const std::vector<T>& w, int n) {
  const int bins = static_cast<int>(w.size());
  SymTensor<T> out(bins, n);
  const tensor::Layout& lay = out.layout();
  for (int i = 0; i < lay.size(); ++i) {
    const auto& mu = lay.counts(i);
    T prod = tensor::from_int<T>(1);
    for (int j = 0; j < bins; ++j) {
      for (int r = 0; r < mu[j]; ++r) {
        prod = prod * (w[j] - tensor::from_int<T>(r));
      }
    }
    out[i] = prod;
  }
  return out;
}

}  // namespace fpm::stirling

#endif
