#ifndef FPM_TENSOR_HPP
#define FPM_TENSOR_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fpm/errors.hpp"
#include "fpm/rational.hpp"

namespace fpm::tensor {

/// Layout of the canonical index set for dense symmetric tensors of a given
/// degree over a given number of bins: all degree-n multisets of bins,
/// enumerated as nondecreasing index tuples in lexicographic order and
/// stored as per-bin count vectors. Size is C(bins + degree - 1, degree).
class Layout {
public:
  static const Layout& get(int bins, int degree);

  int bins() const { return bins_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(counts_.size()); }
  const std::vector<int>& counts(int idx) const { return counts_[idx]; }
  int rank(const std::vector<int>& counts) const;
  /// n! / prod_j counts_j!, the number of ordered index tuples that
  /// collapse onto this multiset; exact integer, <= 8! in the envelope.
  long long multiplicity(int idx) const { return mult_[idx]; }
  /// The nondecreasing bin tuple of entry idx.
  std::vector<int> tuple(int idx) const;

private:
  Layout(int bins, int degree);
  int bins_ = 0;
  int degree_ = 0;
  std::vector<std::vector<int>> counts_;
  std::vector<long long> mult_;
  std::map<std::vector<int>, int> rank_;
};

inline Layout::Layout(int bins, int degree) : bins_(bins), degree_(degree) {
  // Enumerate nondecreasing tuples (b_1 <= ... <= b_n) lexicographically.
  std::vector<int> tup(degree, 0);
  long long nfact = 1;
  for (int i = 2; i <= degree; ++i) nfact *= i;
  for (;;) {
    std::vector<int> c(bins, 0);
    for (int b : tup) ++c[b];
    long long mult = nfact;
    for (int j = 0; j < bins; ++j) {
      for (int r = 2; r <= c[j]; ++r) mult /= r;
    }
    rank_[c] = static_cast<int>(counts_.size());
    counts_.push_back(std::move(c));
    mult_.push_back(mult);
    if (degree == 0) break;
    int p = degree - 1;
    while (p >= 0 && tup[p] == bins - 1) --p;
    if (p < 0) break;
    ++tup[p];
    for (int t = p + 1; t < degree; ++t) tup[t] = tup[p];
  }
}

inline const Layout& Layout::get(int bins, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Layout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({bins, degree});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(bins, degree),
                       std::unique_ptr<Layout>(new Layout(bins, degree)))
             .first;
  }
  return *it->second;
}

inline int Layout::rank(const std::vector<int>& counts) const {
  const auto it = rank_.find(counts);
  if (it == rank_.end()) throw DomainError("Layout: bad multiset");
  return it->second;
}

inline std::vector<int> Layout::tuple(int idx) const {
  std::vector<int> t;
  t.reserve(degree_);
  const auto& c = counts_[idx];
  for (int j = 0; j < bins_; ++j) {
    for (int r = 0; r < c[j]; ++r) t.push_back(j);
  }
  return t;
}

namespace detail {
template <class T>
struct FromIntHelper {
  static T make(long long v) { return T(v); }
};
template <>
struct FromIntHelper<double> {
  static double make(long long v) { return static_cast<double>(v); }
};
template <>
struct FromIntHelper<std::complex<double>> {
  static std::complex<double> make(long long v) {
    return {static_cast<double>(v), 0.0};
  }
};
}  // namespace detail

/// Scalar-from-integer helper shared by the generic algebra below.
template <class T>
T from_int(long long v) {
  return detail::FromIntHelper<T>::make(v);
}

/// Dense symmetric tensor of fixed degree over m bins. Entries are indexed
/// by multisets; the dual pairing against a product vector phi^{x n} is
///   <A, phi^{x n}> = sum_mu mult(mu) A_mu prod_j phi_j^{mu_j}.
/// The same storage serves test-side elements and dual-side kernels; which
/// side a tensor lives on is a property of the call site.
template <class T>
class SymTensor {
public:
  SymTensor() : bins_(1), degree_(0), v_(1, T{}) {}
  SymTensor(int bins, int degree)
      : bins_(bins), degree_(degree), v_(Layout::get(bins, degree).size(), T{}) {
    if (bins < 1 || degree < 0) throw DomainError("SymTensor: bad shape");
  }

  int bins() const { return bins_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(v_.size()); }
  const Layout& layout() const { return Layout::get(bins_, degree_); }

  T& operator[](int idx) { return v_[idx]; }
  const T& operator[](int idx) const { return v_[idx]; }
  T& at_counts(const std::vector<int>& c) { return v_[layout().rank(c)]; }
  const T& at_counts(const std::vector<int>& c) const { return v_[layout().rank(c)]; }

  /// Degree-0 tensors are scalars.
  T scalar() const {
    if (degree_ != 0) throw DomainError("SymTensor: not a scalar");
    return v_[0];
  }

  static SymTensor scalar_tensor(int bins, T value) {
    SymTensor t(bins, 0);
    t.v_[0] = value;
    return t;
  }

  /// Product tensor v^{x n}: entry at mu is prod_j v_j^{mu_j}.
  static SymTensor product_power(const std::vector<T>& vec, int degree) {
    SymTensor t(static_cast<int>(vec.size()), degree);
    const Layout& lay = t.layout();
    for (int i = 0; i < lay.size(); ++i) {
      T prod = from_int<T>(1);
      const auto& c = lay.counts(i);
      for (std::size_t j = 0; j < vec.size(); ++j) {
        for (int r = 0; r < c[j]; ++r) prod = prod * vec[j];
      }
      t.v_[i] = prod;
    }
    return t;
  }

  /// Basis tensor: 1 at one multiset slot, 0 elsewhere.
  static SymTensor basis(int bins, int degree, int idx) {
    SymTensor t(bins, degree);
    t.v_[idx] = from_int<T>(1);
    return t;
  }

  SymTensor& operator+=(const SymTensor& o) {
    check_same_shape(o);
    for (int i = 0; i < size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  SymTensor& operator-=(const SymTensor& o) {
    check_same_shape(o);
    for (int i = 0; i < size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  SymTensor& operator*=(const T& s) {
    for (auto& x : v_) x = x * s;
    return *this;
  }
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(SymTensor a, const T& s) { return a *= s; }
  friend SymTensor operator*(const T& s, SymTensor a) { return a *= s; }

private:
  void check_same_shape(const SymTensor& o) const {
    if (bins_ != o.bins_ || degree_ != o.degree_) {
      throw DomainError("SymTensor: shape mismatch");
    }
  }
  int bins_;
  int degree_;
  std::vector<T> v_;
};

/// Full dual pairing of two same-degree tensors:
///   <A, B> = sum_mu mult(mu) A_mu B_mu
/// (the sum over all ordered index tuples of the entrywise product).
template <class T>
T pair(const SymTensor<T>& a, const SymTensor<T>& b) {
  if (a.bins() != b.bins() || a.degree() != b.degree()) {
    throw DomainError("pair: shape mismatch");
  }
  const Layout& lay = a.layout();
  T acc{};
  for (int i = 0; i < lay.size(); ++i) {
    acc += from_int<T>(lay.multiplicity(i)) * a[i] * b[i];
  }
  return acc;
}

/// Pairing of a degree-n tensor against n (possibly distinct) vectors:
/// the full contraction sum over ordered index tuples. Symmetric in the
/// vectors because A is symmetric.
template <class T>
T pair_vectors(const SymTensor<T>& a, const std::vector<std::vector<T>>& fs) {
  const int n = a.degree();
  const int m = a.bins();
  if (static_cast<int>(fs.size()) != n) throw DomainError("pair_vectors: need n vectors");
  if (n == 0) return a[0];
  const Layout& lay = a.layout();
  T acc{};
  std::vector<int> idx(n, 0);
  std::vector<int> counts(m);
  for (;;) {
    std::fill(counts.begin(), counts.end(), 0);
    T prod = from_int<T>(1);
    for (int p = 0; p < n; ++p) {
      ++counts[idx[p]];
      prod = prod * fs[p][idx[p]];
    }
    acc += prod * a[lay.rank(counts)];
    int p = n - 1;
    while (p >= 0 && idx[p] == m - 1) {
      idx[p] = 0;
      --p;
    }
    if (p < 0) break;
    ++idx[p];
  }
  return acc;
}

/// Symmetrized tensor product. With |mu'| running over size-a sub-multisets,
///   (A sym B)_mu = sum_{mu' <= mu} prod_j C(mu_j, mu'_j) A_{mu'} B_{mu-mu'} / C(a+b, a).
template <class T>
SymTensor<T> sym_product(const SymTensor<T>& a, const SymTensor<T>& b) {
  if (a.bins() != b.bins()) throw DomainError("sym_product: bins mismatch");
  const int m = a.bins();
  const int da = a.degree(), db = b.degree();
  if (da == 0) return b * a[0];
  if (db == 0) return a * b[0];
  SymTensor<T> out(m, da + db);
  const Layout& lo = out.layout();
  const Layout& la = a.layout();
  const Layout& lb = b.layout();

  // C(a+b, a) and binomials stay tiny in the supported envelope.
  static constexpr int kMaxN = 64;
  static thread_local std::vector<std::vector<long long>> binom;
  if (binom.empty()) {
    binom.assign(kMaxN, std::vector<long long>(kMaxN, 0));
    for (int i = 0; i < kMaxN; ++i) {
      binom[i][0] = 1;
      for (int j = 1; j <= i; ++j) {
        binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
      }
    }
  }
  const long long denom = binom[da + db][da];

  std::vector<int> sub(m, 0);
  std::vector<int> rest(m, 0);
  for (int i = 0; i < lo.size(); ++i) {
    const auto& mu = lo.counts(i);
    T acc{};
    std::fill(sub.begin(), sub.end(), 0);
    for (;;) {
      int total = 0;
      for (int t = 0; t < m; ++t) total += sub[t];
      if (total == da) {
        long long ways = 1;
        for (int t = 0; t < m; ++t) {
          ways *= binom[mu[t]][sub[t]];
          rest[t] = mu[t] - sub[t];
        }
        acc += from_int<T>(ways) * a[la.rank(sub)] * b[lb.rank(rest)];
      }
      int j = 0;
      while (j < m && sub[j] == mu[j]) {
        sub[j] = 0;
        ++j;
      }
      if (j == m) break;
      ++sub[j];
    }
    out[i] = acc * (from_int<T>(1) / from_int<T>(denom));
  }
  return out;
}

/// Diagonal restriction operator with parts (i_1, ..., i_k), sum n: maps a
/// degree-n tensor to degree k. Entry at output tuple (b_1 <= ... <= b_k)
/// is the average over part-to-position assignments of the input entry at
/// the multiset {b_l repeated i_l times}.
template <class T>
SymTensor<T> diag_restrict(const std::vector<int>& parts, const SymTensor<T>& phi) {
  const int k = static_cast<int>(parts.size());
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw DomainError("diag_restrict: parts must be >= 1");
    n += p;
  }
  if (n != phi.degree()) throw DomainError("diag_restrict: parts must sum to the degree");
  const int m = phi.bins();
  SymTensor<T> out(m, k);
  const Layout& lo = out.layout();
  const Layout& li = phi.layout();

  // Distinct orderings of the parts; each stands for (prod mult_v!) of the
  // k! position assignments.
  std::vector<int> sorted_parts = parts;
  std::sort(sorted_parts.begin(), sorted_parts.end());
  long long repeats = 1;
  {
    long long run = 1;
    for (int i = 1; i < k; ++i) {
      if (sorted_parts[i] == sorted_parts[i - 1]) {
        ++run;
        repeats *= run;
      } else {
        run = 1;
      }
    }
  }
  long long kfact = 1;
  for (int i = 2; i <= k; ++i) kfact *= i;
  const T weight = from_int<T>(repeats) / from_int<T>(kfact);

  std::vector<int> in_counts(m);
  for (int i = 0; i < lo.size(); ++i) {
    const std::vector<int> tup = lo.tuple(i);
    T acc{};
    std::vector<int> perm = sorted_parts;
    do {
      std::fill(in_counts.begin(), in_counts.end(), 0);
      for (int l = 0; l < k; ++l) in_counts[tup[l]] += perm[l];
      acc += phi[li.rank(in_counts)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    out[i] = acc * weight;
  }
  return out;
}

/// Partial contraction of a test-side degree-m tensor against a dual-side
/// degree-n kernel (n <= m), leaving a test-side degree-(m-n) tensor psi
/// with <w^{x(m-n)} sym Phi, phi> = <w^{x(m-n)}, psi> for every w:
///   psi_{mu'} = sum_nu mult_n(nu) phi_{mu'+nu} Phi_nu.
template <class T>
SymTensor<T> contract_dual(const SymTensor<T>& phi, const SymTensor<T>& kernel) {
  if (phi.bins() != kernel.bins()) throw DomainError("contract_dual: bins mismatch");
  const int m = phi.degree(), n = kernel.degree();
  if (n > m) throw DomainError("contract_dual: kernel degree exceeds tensor degree");
  const int bins = phi.bins();
  SymTensor<T> out(bins, m - n);
  const Layout& lo = out.layout();
  const Layout& lk = kernel.layout();
  const Layout& lp = phi.layout();
  std::vector<int> sum(bins);
  for (int i = 0; i < lo.size(); ++i) {
    const auto& mu = lo.counts(i);
    T acc{};
    for (int j = 0; j < lk.size(); ++j) {
      const auto& nu = lk.counts(j);
      for (int t = 0; t < bins; ++t) sum[t] = mu[t] + nu[t];
      acc += from_int<T>(lk.multiplicity(j)) * phi[lp.rank(sum)] * kernel[j];
    }
    out[i] = acc;
  }
  return out;
}

/// Largest |entry| (for residual scales in the floating modes).
inline double magnitude(double x) { return x < 0 ? -x : x; }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }
inline double magnitude(const Rational& x) {
  const double d = x.to_double();
  return d < 0 ? -d : d;
}

template <class T>
double max_abs(const SymTensor<T>& a) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, magnitude(a[i]));
  return m;
}

}  // namespace fpm::tensor

#endif
