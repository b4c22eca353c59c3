#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "fpm/appell.hpp"
#include "fpm/dual.hpp"
#include "fpm/fpm1d.hpp"
#include "fpm/process.hpp"
#include "fpm/stats.hpp"

using namespace fpm;
using namespace fpm::process;
using specfun::Beta;

TEST_CASE("window invariants") {
  CHECK_THROWS_AS(Window({0.0}, {0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(Window({0.0}, {1.0}, 0.0), DomainError);
  const Window win({0.0, -1.0}, {2.0, 1.0}, 0.5);
  CHECK(win.volume() == doctest::Approx(4.0));
  CHECK(win.mass() == doctest::Approx(2.0));
}

TEST_CASE("bin counts: empty, single point, pairing bridge") {
  const Window win({0.0}, {1.0}, 3.0);
  const auto part = make_axis_partition(win, 4);
  Configuration empty;
  const auto zeros = bin_counts(empty, part);
  for (long c : zeros) CHECK(c == 0);

  Configuration single;
  single.points.push_back({0.6});
  const auto one_hot = bin_counts(single, part);
  CHECK(one_hot[2] == 1);
  CHECK(one_hot[0] + one_hot[1] + one_hot[3] == 0);

  // <gamma, phi> for a step phi equals sum_j count_j phi_j.
  Configuration config;
  config.points = {{0.05}, {0.3}, {0.33}, {0.99}, {1.0}};
  const auto counts = bin_counts(config, part);
  long total = 0;
  for (long c : counts) total += c;
  CHECK(total == config.size());
  const std::vector<double> phi = {1.0, -2.0, 0.5, 3.0};
  double via_counts = 0.0;
  for (int j = 0; j < 4; ++j) via_counts += double(counts[j]) * phi[j];
  double via_points = 0.0;
  for (const auto& x : config.points) via_points += phi[part.locate(x[0])];
  CHECK(via_counts == doctest::Approx(via_points));
}

TEST_CASE("all sampled points land inside the window") {
  const Window win({-1.0, 2.0}, {1.0, 3.0}, 1.5);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto config = sample_configuration(win, Beta(0.7), rng);
    for (const auto& x : config.points) {
      REQUIRE(x.size() == 2);
      CHECK(x[0] >= -1.0);
      CHECK(x[0] <= 1.0);
      CHECK(x[1] >= 2.0);
      CHECK(x[1] <= 3.0);
    }
  }
}

TEST_CASE("beta = 1 gives a homogeneous Poisson count") {
  const Window win({0.0, 0.0}, {1.0, 1.0}, 2.0);
  Rng rng(51);
  const int n = 50000;
  std::vector<long> observed(13, 0);
  for (int i = 0; i < n; ++i) {
    ++observed[std::min<long>(sample_configuration(win, Beta(1.0), rng).size(), 12)];
  }
  std::vector<double> probs(13, 0.0);
  double head = 0.0;
  for (int k = 0; k <= 11; ++k) {
    probs[k] = std::exp(k * std::log(2.0) - std::lgamma(k + 1.0) - 2.0);
    head += probs[k];
  }
  probs[12] = 1.0 - head;
  CHECK(stats::chi_square_gof(observed, probs).p_value > 0.001);
}

TEST_CASE("count law matches the scalar fractional law") {
  const Window win({0.0, 0.0}, {1.0, 1.0}, 2.0);
  const Beta beta(0.6);
  Rng rng(52);
  const int n = 60000;
  std::vector<long> observed(27, 0);
  for (int i = 0; i < n; ++i) {
    ++observed[std::min<long>(sample_configuration(win, beta, rng).size(), 26)];
  }
  const fpm1d::Fpm1D d{2.0, beta};
  std::vector<double> probs(27, 0.0);
  double head = 0.0;
  for (int k = 0; k <= 25; ++k) {
    probs[k] = fpm1d::pmf(d, k);
    head += probs[k];
  }
  probs[26] = std::max(1.0 - head, 0.0);
  CHECK(stats::chi_square_gof(observed, probs).p_value > 0.001);
}

TEST_CASE("sub-box marginal count follows the restricted mass") {
  // Counts inside the left half of the window follow the scalar law with
  // rate sigma(half window).
  const Window win({0.0}, {1.0}, 3.0);
  const Beta beta(0.7);
  Rng rng(53);
  const int n = 60000;
  std::vector<long> observed(22, 0);
  for (int i = 0; i < n; ++i) {
    const auto config = sample_configuration(win, beta, rng);
    long in_half = 0;
    for (const auto& x : config.points) in_half += (x[0] < 0.5);
    ++observed[std::min<long>(in_half, 21)];
  }
  const fpm1d::Fpm1D half{1.5, beta};
  std::vector<double> probs(22, 0.0);
  double head = 0.0;
  for (int k = 0; k <= 20; ++k) {
    probs[k] = fpm1d::pmf(half, k);
    head += probs[k];
  }
  probs[21] = std::max(1.0 - head, 0.0);
  CHECK(stats::chi_square_gof(observed, probs).p_value > 0.001);
}

TEST_CASE("empirical characteristic functional") {
  const Window win({0.0}, {1.0}, 2.0);
  const int bins = 4;
  const auto part = make_axis_partition(win, bins);
  const int n = 100000;

  // phi = 0 gives exactly 1.
  {
    Rng rng(54);
    std::vector<std::vector<long>> counts;
    for (int i = 0; i < 1000; ++i) {
      counts.push_back(bin_counts(sample_configuration(win, Beta(0.5), rng), part));
    }
    const auto est = empirical_char_functional(counts, std::vector<double>(bins, 0.0));
    CHECK(est.mean.real() == 1.0);
    CHECK(est.mean.imag() == 0.0);
  }

  for (double b : {1.0, 0.5}) {
    Rng rng(55 + int(10 * b));
    const Beta beta(b);
    std::vector<std::vector<long>> counts;
    counts.reserve(n);
    for (int i = 0; i < n; ++i) {
      counts.push_back(bin_counts(sample_configuration(win, beta, rng), part));
    }
    Rng phi_rng(56);
    const auto masses = part.masses();
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<double> phi(bins);
      for (int j = 0; j < bins; ++j) phi[j] = 2.0 * phi_rng.uniform() - 1.0;
      const auto est = empirical_char_functional(counts, phi);
      std::complex<double> arg = 0.0;
      for (int j = 0; j < bins; ++j) {
        arg += masses[j] * (std::exp(std::complex<double>(0.0, phi[j])) - 1.0);
      }
      const auto want = specfun::mittag_leffler(beta, arg);
      CHECK(std::abs(est.mean.real() - want.real()) < 4.0 * est.se_re);
      CHECK(std::abs(est.mean.imag() - want.imag()) < 4.0 * est.se_im);
    }
  }
}

TEST_CASE("sampled configurations witness the vanishing kernel expectations") {
  // Monte-Carlo version of the degree >= 1 kernel-expectation identity, and
  // agreement of the exact expectation with the sampled average for a
  // random degree-3 polynomial in the bin counts.
  const Window win({0.0}, {1.0}, 2.0);
  const int bins = 2;
  const auto part = make_axis_partition(win, bins);
  const Beta beta(0.6);
  const auto ks = appell::build_kernel_set(
      appell::DiscretizedIntensity(part.masses()), beta, 8);

  Rng rng(57);
  const int n = 100000;
  std::vector<std::vector<long>> counts;
  counts.reserve(n);
  for (int i = 0; i < n; ++i) {
    counts.push_back(bin_counts(sample_configuration(win, beta, rng), part));
  }

  Rng coeff_rng(58);
  auto rnd = [&]() {
    return appell::cplx{coeff_rng.uniform() * 2 - 1, coeff_rng.uniform() * 2 - 1};
  };

  // Vanishing expectations for the kernel monomials, degrees 1..3.
  for (int deg = 1; deg <= 3; ++deg) {
    tensor::SymTensor<appell::cplx> phi_n(bins, deg);
    for (int i = 0; i < phi_n.size(); ++i) phi_n[i] = rnd();
    std::vector<tensor::SymTensor<appell::cplx>> cb;
    for (int j = 0; j < deg; ++j) cb.emplace_back(bins, j);
    cb.push_back(phi_n);
    const auto p = dual::c_basis_to_monomial(cb, ks);

    std::vector<double> re(n), im(n);
    for (int i = 0; i < n; ++i) {
      std::vector<appell::cplx> w = {double(counts[i][0]), double(counts[i][1])};
      const auto v = p.evaluate(w);
      re[i] = v.real();
      im[i] = v.imag();
    }
    const auto mre = stats::mean_se(re);
    const auto mim = stats::mean_se(im);
    CHECK(std::abs(mre.mean) < 5.0 * mre.se);
    CHECK(std::abs(mim.mean) < 5.0 * mim.se);
  }

  // Exact expectation vs Monte Carlo for a random monomial polynomial.
  dual::PolynomialFunctional p(bins, 3);
  for (int d = 0; d <= 3; ++d) {
    for (int i = 0; i < p.coeff[d].size(); ++i) p.coeff[d][i] = rnd();
  }
  std::vector<double> re(n), im(n);
  for (int i = 0; i < n; ++i) {
    std::vector<appell::cplx> w = {double(counts[i][0]), double(counts[i][1])};
    const auto v = p.evaluate(w);
    re[i] = v.real();
    im[i] = v.imag();
  }
  const auto exact = dual::expectation(p, ks);
  const auto mre = stats::mean_se(re);
  const auto mim = stats::mean_se(im);
  CHECK(std::abs(mre.mean - exact.real()) < 5.0 * mre.se);
  CHECK(std::abs(mim.mean - exact.imag()) < 5.0 * mim.se);
}

TEST_CASE("tiny window: no points with probability near one") {
  const Window win({0.0}, {1.0}, 1e-9);
  Rng rng(59);
  long total = 0;
  for (int i = 0; i < 1000; ++i) total += sample_configuration(win, Beta(0.4), rng).size();
  CHECK(total == 0);
}
