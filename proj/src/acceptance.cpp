#include "fpm/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include "fpm/appell.hpp"
#include "fpm/dual.hpp"
#include "fpm/fpm1d.hpp"
#include "fpm/fpm2d.hpp"
#include "fpm/process.hpp"
#include "fpm/stats.hpp"
#include "fpm/stirling.hpp"

namespace fpm::acceptance {

namespace {

using appell::cplx;
using appell::DiscretizedIntensity;
using appell::KernelSet;
using specfun::Beta;
using tensor::SymTensor;

constexpr double kLambdaGrid[] = {0.5, 1.0, 2.0, 5.0};
constexpr double kBetaGrid[] = {0.3, 0.5, 0.7, 1.0};

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

cplx random_unit_complex(Rng& rng) {
  return {rng.uniform() * 2.0 - 1.0, rng.uniform() * 2.0 - 1.0};
}

SymTensor<cplx> random_tensor(int bins, int degree, Rng& rng) {
  SymTensor<cplx> t(bins, degree);
  for (int i = 0; i < t.size(); ++i) t[i] = random_unit_complex(rng);
  return t;
}

std::vector<SymTensor<cplx>> single_degree_cbasis(const SymTensor<cplx>& top) {
  std::vector<SymTensor<cplx>> cb;
  for (int j = 0; j < top.degree(); ++j) cb.emplace_back(top.bins(), j);
  cb.push_back(top);
  return cb;
}

struct Check {
  bool pass = true;
  double worst = 0.0;
  std::string note;
  void fold(double residual, double tolerance, const std::string& what) {
    worst = std::max(worst, residual);
    if (!(residual <= tolerance)) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

// --- criterion 1: closed-form moments --------------------------------------

CriterionResult criterion_moments() {
  CriterionResult r{1, "moment formulas vs closed forms", false, "", 0.0};
  Check chk;
  for (double lam : kLambdaGrid) {
    for (double b : kBetaGrid) {
      const fpm1d::Fpm1D d{lam, Beta(b)};
      const double g1 = specfun::reciprocal_gamma(b + 1.0);
      const double g2 = specfun::reciprocal_gamma(2.0 * b + 1.0);
      const double g3 = specfun::reciprocal_gamma(3.0 * b + 1.0);
      const double closed[3] = {lam * g1, lam * g1 + 2.0 * lam * lam * g2,
                                lam * g1 + 6.0 * lam * lam * g2 +
                                    6.0 * lam * lam * lam * g3};
      for (int n = 1; n <= 3; ++n) {
        const double got = fpm1d::moment(d, n);
        const double rel = std::abs(got - closed[n - 1]) / std::abs(closed[n - 1]);
        std::ostringstream what;
        what << "moment(" << n << ") at lambda=" << lam << " beta=" << b;
        chk.fold(rel, 1e-10, what.str());
      }
    }
  }
  std::ostringstream det;
  det << "n=1..3 over 16 grid points, worst relative deviation " << chk.worst;
  if (!chk.note.empty()) det << " [" << chk.note << "]";
  r.pass = chk.pass;
  r.detail = det.str();
  return r;
}

// --- criterion 2: pmf normalization + beta=1 collapse -----------------------

CriterionResult criterion_pmf() {
  CriterionResult r{2, "pmf normalization and beta=1 collapse", false, "", 0.0};
  Check chk;
  double worst_norm = 0.0, worst_poisson = 0.0;
  for (double lam : kLambdaGrid) {
    for (double b : kBetaGrid) {
      const fpm1d::Fpm1D d{lam, Beta(b)};
      const long cutoff = fpm1d::tail_cutoff(d, 1e-9);
      double sum = 0.0;
      for (long k = 0; k <= cutoff; ++k) {
        const double p = fpm1d::pmf(d, static_cast<int>(k));
        sum += p;
        if (b == 1.0) {
          const double poisson =
              std::exp(k * std::log(lam) - std::lgamma(double(k) + 1.0) - lam);
          worst_poisson = std::max(worst_poisson, std::abs(p - poisson));
        }
      }
      worst_norm = std::max(worst_norm, std::abs(sum - 1.0));
      std::ostringstream what;
      what << "normalization at lambda=" << lam << " beta=" << b
           << " (cutoff " << cutoff << ")";
      chk.fold(std::abs(sum - 1.0), 1e-8, what.str());
    }
  }
  chk.fold(worst_poisson, 1e-12, "beta=1 pmf vs Poisson");
  std::ostringstream det;
  det << "worst |sum-1| " << worst_norm << ", worst beta=1 deviation " << worst_poisson;
  if (!chk.note.empty()) det << " [" << chk.note << "]";
  r.pass = chk.pass;
  r.detail = det.str();
  return r;
}

// --- criterion 3: non-orthogonality sweep ----------------------------------

CriterionResult criterion_f_sweep() {
  CriterionResult r{3, "cross-pairing defect F over the beta grid", false, "", 0.0};
  Check chk;
  const std::vector<std::pair<double, double>> pairs = {{1, 1}, {2, 3}, {1, 2}};
  const auto rows = fpm2d::f_sweep(0.1, 1.0, 0.05, pairs);
  if (rows.size() != 57) {
    r.detail = "expected 57 rows, got " + std::to_string(rows.size());
    return r;
  }
  double worst_endpoint = 0.0, min_body = 1e300, worst_route = 0.0;
  for (const auto& row : rows) {
    if (row.beta == 1.0) {
      worst_endpoint = std::max(worst_endpoint, std::abs(row.f));
      chk.fold(std::abs(row.f), 1e-10, "F at beta=1 not zero");
    } else if (row.beta <= 0.9 + 1e-12) {
      min_body = std::min(min_body, std::abs(row.f));
      if (!(std::abs(row.f) > 1e-6)) {
        chk.fold(1.0, 0.5, "F vanished below 1e-6 in the body");
      }
    }
    // Independent route: Gram-Schmidt coefficients contracted against the
    // joint moments.
    const Beta b(row.beta);
    const auto c1 = fpm1d::orthogonal_polys({row.lambda1, b}, 1)[1];
    const auto c2 = fpm2d::Fpm2D{row.lambda1, row.lambda2, b};
    const auto poly2 = fpm1d::orthogonal_polys({row.lambda2, b}, 2)[2];
    double expect = 0.0;
    for (int i = 0; i <= 1; ++i) {
      for (int j = 0; j <= 2; ++j) {
        expect += c1.coeffs[i] * poly2.coeffs[j] * fpm2d::moment2(c2, i, j);
      }
    }
    worst_route = std::max(worst_route, std::abs(expect - row.f));
    chk.fold(std::abs(expect - row.f), 1e-9, "route disagreement");
  }
  std::ostringstream det;
  det << "57 rows; |F(1,.)| <= " << worst_endpoint << ", min |F| on beta<=0.9 "
      << min_body << ", route agreement " << worst_route;
  if (!chk.note.empty()) det << " [" << chk.note << "]";
  r.pass = chk.pass;
  r.detail = det.str();
  return r;
}

// --- criterion 4: mixture sampling -----------------------------------------

CriterionResult criterion_sampling() {
  CriterionResult r{4, "mixture sampling GOF and nu_beta Laplace transform", false,
                    "", 0.0};
  Check chk;
  std::ostringstream det;
  const int n_draws = 100000;
  for (double b : {0.5, 0.7}) {
    const Beta beta(b);
    const fpm1d::Fpm1D d{1.5, beta};
    Rng rng(20240 + static_cast<int>(100 * b));

    // Chi-square of sampled counts against the pmf on {0..20} plus tail.
    std::vector<long> observed(22, 0);
    for (int i = 0; i < n_draws; ++i) {
      const long k = fpm1d::sample(d, rng);
      ++observed[std::min<long>(k, 21)];
    }
    std::vector<double> probs(22, 0.0);
    double head = 0.0;
    for (int k = 0; k <= 20; ++k) {
      probs[k] = fpm1d::pmf(d, k);
      head += probs[k];
    }
    probs[21] = std::max(1.0 - head, 0.0);
    const auto gof = stats::chi_square_gof(observed, probs);
    det << "beta=" << b << ": count GOF p=" << gof.p_value;
    if (!(gof.p_value > 0.001)) chk.fold(1.0, 0.5, "count GOF rejected");

    // Empirical Laplace transform of the mixing draw vs E_beta(-z).
    std::vector<double> taus(n_draws);
    for (int i = 0; i < n_draws; ++i) taus[i] = specfun::sample_nu_beta(beta, rng);
    for (double z : {0.5, 1.0, 2.0}) {
      std::vector<double> vals(n_draws);
      for (int i = 0; i < n_draws; ++i) vals[i] = std::exp(-z * taus[i]);
      const auto ms = stats::mean_se(vals);
      const double ref = specfun::ml_derivative(beta, 0, -z);
      const double dev_se = std::abs(ms.mean - ref) / ms.se;
      det << ", z=" << z << ": " << dev_se << " SE";
      chk.fold(dev_se, 4.0, "Laplace transform beyond 4 SE");
    }
    det << "; ";
  }
  if (!chk.note.empty()) det << " [" << chk.note << "]";
  r.pass = chk.pass;
  r.detail = det.str();
  return r;
}

// --- criterion 5: point process ---------------------------------------------

CriterionResult criterion_process() {
  CriterionResult r{5, "point process counts and characteristic functional", false,
                    "", 0.0};
  Check chk;
  std::ostringstream det;
  const process::Window win({0.0, 0.0}, {1.0, 1.0}, 2.0);  // sigma(window) = 2
  const Beta beta(0.6);
  const int n_draws = 100000;
  Rng rng(777);

  const int bins = 4;
  const auto part = process::make_axis_partition(win, bins);
  std::vector<std::vector<long>> counts;
  counts.reserve(n_draws);
  std::vector<long> observed(27, 0);
  for (int i = 0; i < n_draws; ++i) {
    const auto config = process::sample_configuration(win, beta, rng);
    ++observed[std::min<long>(config.size(), 26)];
    counts.push_back(process::bin_counts(config, part));
  }

  // Count law P(N=n) = E^{(n)}(-sigma) sigma^n / n! = pmf at lambda = sigma.
  const fpm1d::Fpm1D d{win.mass(), beta};
  std::vector<double> probs(27, 0.0);
  double head = 0.0;
  for (int k = 0; k <= 25; ++k) {
    probs[k] = fpm1d::pmf(d, k);
    head += probs[k];
  }
  probs[26] = std::max(1.0 - head, 0.0);
  const auto gof = stats::chi_square_gof(observed, probs);
  det << "count GOF p=" << gof.p_value;
  if (!(gof.p_value > 0.001)) chk.fold(1.0, 0.5, "count GOF rejected");

  // Characteristic functional against E_beta(sum sigma_j (e^{i phi_j} - 1))
  // for 5 random step functions.
  Rng phi_rng(31415);
  const auto masses = part.masses();
  double worst_se = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> phi(bins);
    for (int j = 0; j < bins; ++j) phi[j] = 2.0 * phi_rng.uniform() - 1.0;
    const auto est = process::empirical_char_functional(counts, phi);
    std::complex<double> arg = 0.0;
    for (int j = 0; j < bins; ++j) {
      arg += masses[j] * (std::exp(std::complex<double>(0.0, phi[j])) - 1.0);
    }
    const auto ref = specfun::mittag_leffler(beta, arg);
    const double dev_re = std::abs(est.mean.real() - ref.real()) / est.se_re;
    const double dev_im = std::abs(est.mean.imag() - ref.imag()) /
                          std::max(est.se_im, 1e-12);
    worst_se = std::max(worst_se, std::max(dev_re, dev_im));
    chk.fold(dev_re, 4.0, "char functional (re) beyond 4 SE");
    chk.fold(dev_im, 4.0, "char functional (im) beyond 4 SE");
  }
  det << ", char functional worst " << worst_se << " SE over 5 random steps";
  if (!chk.note.empty()) det << " [" << chk.note << "]";
  r.pass = chk.pass;
  r.detail = det.str();
  return r;
}

// --- criterion 6: Stirling suite --------------------------------------------

CriterionResult criterion_stirling() {
  CriterionResult r{6, "Stirling operators: exact inversion and generating identities",
                    false, "", 0.0};
  Check chk;
  const stirling::StirlingTable table(8);

  // Exact matrix inversion to n = 8.
  bool inversion_ok = true;
  for (int n = 0; n <= 8; ++n) {
    for (int i = 0; i <= 8; ++i) {
      long long acc = 0;
      for (int k = 0; k <= 8; ++k) acc += table.s2(k, i) * table.s1(n, k);
      if (acc != (n == i ? 1 : 0)) inversion_ok = false;
    }
  }
  if (!inversion_ok) chk.fold(1.0, 0.5, "number-level inversion failed");

  // Operator identity on random rational tensors, m = 2, n <= 5, exact.
  Rng rng(99);
  bool operator_ok = true;
  for (int n = 1; n <= 5; ++n) {
    SymTensor<Rational> phi(2, n);
    for (int i = 0; i < phi.size(); ++i) {
      phi[i] = Rational(static_cast<long long>(rng.next() % 17) - 8);
    }
    for (int i = 1; i <= n; ++i) {
      SymTensor<Rational> acc(2, i);
      for (int k = i; k <= n; ++k) {
        acc += stirling::stirling_op2(k, i, stirling::stirling_op1(n, k, phi));
      }
      for (int t = 0; t < acc.size(); ++t) {
        const Rational want = (i == n) ? phi[t] : Rational(0);
        if (!(acc[t] == want)) operator_ok = false;
      }
    }
  }
  if (!operator_ok) chk.fold(1.0, 0.5, "operator inversion identity failed");

  // Generating identities at N = 8 in float mode. The test vector is kept
  // small enough that the degree-9 tail sits below the tolerance.
  double worst = 0.0;
  const std::vector<double> xi = {0.075, -0.06};
  for (int k = 1; k <= 4; ++k) {
    SymTensor<double> acc1(2, k), acc2(2, k);
    double nf = 1.0;
    for (int n = 1; n <= 8; ++n) {
      nf *= n;
      if (n < k) continue;
      const auto xin = SymTensor<double>::product_power(xi, n);
      acc1 += (1.0 / nf) * stirling::stirling_op1(n, k, xin);
      acc2 += (1.0 / nf) * stirling::stirling_op2(n, k, xin);
    }
    std::vector<double> lg(2), em(2);
    for (int j = 0; j < 2; ++j) {
      lg[j] = std::log1p(xi[j]);
      em[j] = std::expm1(xi[j]);
    }
    const double kf = factorial(k);
    const auto want1 = SymTensor<double>::product_power(lg, k) * (1.0 / kf);
    const auto want2 = SymTensor<double>::product_power(em, k) * (1.0 / kf);
    for (int t = 0; t < acc1.size(); ++t) {
      worst = std::max(worst, std::abs(acc1[t] - want1[t]));
      worst = std::max(worst, std::abs(acc2[t] - want2[t]));
    }
  }
  chk.fold(worst, 1e-10, "generating identity residual");

  std::ostringstream det;
  det << "inversion exact to n=8, operator identity exact (m=2, n<=5), "
      << "generating identities at N=8 worst " << chk.worst;
  if (!chk.note.empty()) det << " [" << chk.note << "]";
  r.pass = chk.pass;
  r.detail = det.str();
  return r;
}

// --- criterion 7: Appell kernel identity suite -------------------------------

CriterionResult criterion_appell() {
  CriterionResult r{7, "Appell kernel identities (shift, Stirling, expectation)",
                    false, "", 0.0};
  Check chk;
  const DiscretizedIntensity sigma({0.8, 1.4});
  const Beta beta(0.6);
  const int order = 8;
  const KernelSet ks = appell::build_kernel_set(sigma, beta, order);
  Rng rng(4242);

  double scale = 1.0;
  auto tol = [&]() { return 1e-9 * scale; };

  for (int rep = 0; rep < 3; ++rep) {
    std::vector<cplx> w = {random_unit_complex(rng), random_unit_complex(rng)};
    std::vector<cplx> z = {random_unit_complex(rng), random_unit_complex(rng)};
    std::vector<cplx> zw = {z[0] + w[0], z[1] + w[1]};
    const auto c_w = appell::c_kernels(ks, w);
    const auto c_z = appell::c_kernels(ks, z);
    const auto c_zw = appell::c_kernels(ks, zw);
    const auto p_w = appell::p_kernels(ks, w);
    for (const auto& kern : c_zw) scale = std::max(scale, tensor::max_abs(kern));

    for (int n = 0; n <= 4; ++n) {
      // (P1) C_n(w) = sum_m s_op(n,m)^* P_m(w).
      SymTensor<cplx> acc(2, n);
      if (n == 0) acc[0] = p_w[0][0];
      for (int m = 1; m <= n; ++m) {
        acc += stirling::stirling_op1_adjoint(n, m, p_w[m]);
      }
      chk.fold(tensor::max_abs(acc - c_w[n]), tol(), "(P1)");

      // (P2) w^{x n} reconstruction through S_op^* C and moment kernels.
      SymTensor<cplx> recon(2, n);
      for (int k = 0; k <= n; ++k) {
        SymTensor<cplx> inner_sum(2, k);
        if (k == 0) inner_sum[0] = c_w[0][0];
        for (int m = 1; m <= k; ++m) {
          inner_sum += stirling::stirling_op2_adjoint(k, m, c_w[m]);
        }
        recon += cplx(binomial(n, k)) * tensor::sym_product(inner_sum, ks.moment[n - k]);
      }
      chk.fold(tensor::max_abs(recon - SymTensor<cplx>::product_power(w, n)), tol(),
               "(P2)");

      // (P3) shift decomposition through the alpha moment kernels.
      SymTensor<cplx> shift3(2, n);
      for (int k = 0; k <= n; ++k) {
        for (int l = 0; l + k <= n; ++l) {
          const int m = n - k - l;
          const double coeff = factorial(n) / (factorial(k) * factorial(l) * factorial(m));
          shift3 += cplx(coeff) * tensor::sym_product(
                        tensor::sym_product(c_z[k], c_w[l]), ks.moment_alpha[m]);
        }
      }
      chk.fold(tensor::max_abs(shift3 - c_zw[n]), tol(), "(P3)");

      // (P4) shift decomposition through falling factorials.
      SymTensor<cplx> shift4(2, n);
      for (int k = 0; k <= n; ++k) {
        shift4 += cplx(binomial(n, k)) *
                  tensor::sym_product(c_z[k], stirling::falling_factorial(w, n - k));
      }
      chk.fold(tensor::max_abs(shift4 - c_zw[n]), tol(), "(P4)");

      // (P5) value decomposition through C_k(0) and first-kind adjoints.
      SymTensor<cplx> val5(2, n);
      for (int k = 0; k <= n; ++k) {
        SymTensor<cplx> inner_sum(2, n - k);
        if (n == k) inner_sum[0] = 1.0;
        for (int m = 1; m <= n - k; ++m) {
          inner_sum += stirling::stirling_op1_adjoint(
              n - k, m, SymTensor<cplx>::product_power(w, m));
        }
        val5 += cplx(binomial(n, k)) * tensor::sym_product(ks.c_at_zero[k], inner_sum);
      }
      chk.fold(tensor::max_abs(val5 - c_w[n]), tol(), "(P5)");
    }

    // (P6) exact expectation of C-basis monomials.
    for (int n = 0; n <= 4; ++n) {
      const auto phi_n = random_tensor(2, n, rng);
      const auto p = dual::c_basis_to_monomial(single_degree_cbasis(phi_n), ks);
      const cplx e = dual::expectation(p, ks);
      const cplx want = (n == 0) ? phi_n[0] : cplx(0.0);
      chk.fold(std::abs(e - want), tol(), "(P6)");
    }
  }

  // Cross-check with the scalar law: <M_n, 1^{x n}> = moment(n) at one bin.
  {
    const DiscretizedIntensity s1({2.0});
    const KernelSet k1 = appell::build_kernel_set(s1, beta, 6);
    const fpm1d::Fpm1D d{2.0, beta};
    const std::vector<cplx> ones = {1.0};
    for (int n = 0; n <= 6; ++n) {
      const double got =
          tensor::pair(k1.moment[n], SymTensor<cplx>::product_power(ones, n)).real();
      const double want = fpm1d::moment(d, n);
      chk.fold(std::abs(got - want) / std::max(1.0, std::abs(want)), 1e-9,
               "scalar moment cross-check");
    }
  }

  std::ostringstream det;
  det << "(P1)-(P6) on random complex shifts, m=2, n<=4; worst residual "
      << chk.worst << " against 1e-9*scale";
  if (!chk.note.empty()) det << " [" << chk.note << "]";
  r.pass = chk.pass;
  r.detail = det.str();
  return r;
}

// --- criterion 8: biorthogonality -------------------------------------------

CriterionResult criterion_biorthogonality() {
  CriterionResult r{8, "biorthogonality of the kernel system and its dual", false,
                    "", 0.0};
  Check chk;
  const DiscretizedIntensity sigma({1.0, 1.0});
  const Beta beta(0.6);
  const KernelSet ks = appell::build_kernel_set(sigma, beta, 8);
  Rng rng(2025);

  double worst_off = 0.0, worst_diag = 0.0;
  for (int draw = 0; draw < 10; ++draw) {
    std::vector<SymTensor<cplx>> duals, tests;
    for (int n = 0; n <= 4; ++n) {
      duals.push_back(random_tensor(2, n, rng));
      tests.push_back(random_tensor(2, n, rng));
    }
    double scale = 1.0;
    for (int n = 0; n <= 4; ++n) {
      scale = std::max(scale, factorial(n) * tensor::max_abs(duals[n]) *
                                  tensor::max_abs(tests[n]) * 8.0);
    }
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= 4; ++m) {
        const auto p = dual::c_basis_to_monomial(single_degree_cbasis(tests[m]), ks);
        const cplx got = dual::q_pairing(n, duals[n], p, ks);
        if (n == m) {
          const cplx want = cplx(factorial(n)) * tensor::pair(duals[n], tests[n]);
          worst_diag = std::max(worst_diag, std::abs(got - want));
          chk.fold(std::abs(got - want), 1e-9 * scale, "diagonal entry");
        } else {
          worst_off = std::max(worst_off, std::abs(got));
          chk.fold(std::abs(got), 1e-9 * scale, "off-diagonal leak");
        }
      }
    }
  }

  // Route agreement at order 8: the transform side evaluates
  // sum_n <Phi, (e^phi - 1)^{x n}> directly; the operator side pairs
  // against the truncated normalized exponential. The step function is
  // kept small so the degree-9 tail sits below the tolerance.
  double worst_route = 0.0;
  const std::vector<cplx> phi = {cplx(0.045, 0.02), cplx(-0.03, 0.04)};
  const auto wick = dual::truncated_wick_exponential(phi, ks, 8);
  for (int n = 0; n <= 4; ++n) {
    const auto phi_n = random_tensor(2, n, rng);
    dual::QDistribution dist;
    dist.bins = 2;
    for (int j = 0; j < n; ++j) dist.kernel.emplace_back(2, j);
    dist.kernel.push_back(phi_n);
    const cplx transform_route = dual::s_transform(dist, phi);
    const cplx operator_route = dual::q_pairing(n, phi_n, wick, ks);
    worst_route = std::max(worst_route, std::abs(transform_route - operator_route));
  }
  chk.fold(worst_route, 1e-8, "transform/operator route disagreement");

  std::ostringstream det;
  det << "10 draws, 5x5 table: worst off-diagonal " << worst_off
      << ", worst diagonal deviation " << worst_diag << ", route agreement "
      << worst_route;
  if (!chk.note.empty()) det << " [" << chk.note << "]";
  r.pass = chk.pass;
  r.detail = det.str();
  return r;
}

// --- criterion 9: convolution, delta, norm series ----------------------------

CriterionResult criterion_section6() {
  CriterionResult r{9, "convolution/delta two-path identities and norm series",
                    false, "", 0.0};
  Check chk;
  const DiscretizedIntensity sigma({0.9, 1.1});
  const Beta beta(0.55);
  const KernelSet ks = appell::build_kernel_set(sigma, beta, 8);
  Rng rng(606);

  double worst = 0.0;
  for (int draw = 0; draw < 10; ++draw) {
    std::vector<SymTensor<cplx>> cb;
    for (int j = 0; j <= 4; ++j) cb.push_back(random_tensor(2, j, rng));
    const std::vector<cplx> w = {random_unit_complex(rng), random_unit_complex(rng)};
    const std::vector<cplx> neg_w = {-w[0], -w[1]};

    const cplx direct = dual::convolution(cb, w);
    const cplx rewritten = dual::convolution_stirling(cb, w);
    const auto p = dual::c_basis_to_monomial(cb, ks);
    const cplx through_dual = dual::rnd_pairing(neg_w, p, ks);
    const double scale = std::max(1.0, std::abs(direct));
    chk.fold(std::abs(rewritten - direct), 1e-9 * scale, "Stirling rewrite");
    chk.fold(std::abs(through_dual - direct), 1e-9 * scale, "dual-kernel route");

    const cplx at_w = dual::delta_pairing(w, cb, ks);
    const cplx eval = p.evaluate(w);
    chk.fold(std::abs(at_w - eval), 1e-9 * std::max(1.0, std::abs(eval)),
             "delta evaluation");
    worst = std::max(worst, chk.worst);
  }

  // Norm series closed forms and the divergence boundary.
  for (double t : {0.2, 0.7, 1.5}) {
    chk.fold(std::abs(dual::wick_norm_sq(t, 0.0) - std::exp(t)), 1e-12 * std::exp(t),
             "kappa=0 closed form");
  }
  if (!(dual::wick_norm_sq(0.5, 1.0) == 2.0)) chk.fold(1.0, 0.5, "kappa=1 value");
  const double below = dual::wick_norm_sq(1.0 - 1e-6, 1.0);
  const double above = dual::wick_norm_sq(1.0 + 1e-6, 1.0);
  if (!(std::isfinite(below) && below > 0.9e6 && std::isinf(above))) {
    chk.fold(1.0, 0.5, "kappa=1 divergence boundary");
  }

  std::ostringstream det;
  det << "10 random degree-4 polynomials; worst identity residual " << chk.worst
      << "; norm boundary at t=1 verified";
  if (!chk.note.empty()) det << " [" << chk.note << "]";
  r.pass = chk.pass;
  r.detail = det.str();
  return r;
}

using CriterionFn = CriterionResult (*)();
constexpr CriterionFn kCriteria[] = {
    criterion_moments,  criterion_pmf,     criterion_f_sweep,
    criterion_sampling, criterion_process, criterion_stirling,
    criterion_appell,   criterion_biorthogonality, criterion_section6,
};
// Wall-clock budget per criterion, in seconds; part of the pass condition.
constexpr double kRuntimeLimit[] = {1, 5, 10, 30, 60, 10, 30, 60, 5};

CriterionResult timed(CriterionFn fn, double limit_seconds) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r = fn();
  const auto stop = std::chrono::steady_clock::now();
  r.seconds = std::chrono::duration<double>(stop - start).count();
  if (r.seconds > limit_seconds) {
    r.pass = false;
    r.detail += " [runtime limit " + std::to_string(limit_seconds) + "s exceeded]";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < std::size(kCriteria); ++i) {
    out.push_back(timed(kCriteria[i], kRuntimeLimit[i]));
  }
  return out;
}

CriterionResult run_one(int id) {
  if (id < 1 || id > static_cast<int>(std::size(kCriteria))) {
    throw DomainError("run_one: criterion id out of range");
  }
  return timed(kCriteria[id - 1], kRuntimeLimit[id - 1]);
}

}  // namespace fpm::acceptance
