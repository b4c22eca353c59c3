#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "fpm/appell.hpp"
#include "fpm/fpm2d.hpp"

using namespace fpm;
using namespace fpm::fpm2d;
using specfun::Beta;

TEST_CASE("joint Laplace transform basics") {
  const Fpm2D d{1.3, 0.8, Beta(0.6)};
  CHECK(laplace2(d, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  // beta = 1 factorizes into the two scalar Poisson transforms.
  const Fpm2D p{1.3, 0.8, Beta(1.0)};
  const double want = std::exp(1.3 * std::expm1(0.2)) * std::exp(0.8 * std::expm1(-0.4));
  CHECK(laplace2(p, 0.2, -0.4) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("joint moments: values reported by the scalar expansion") {
  const double l1 = 1.7, l2 = 0.9;
  for (double b : {0.4, 0.75}) {
    const Fpm2D d{l1, l2, Beta(b)};
    const double g2 = specfun::reciprocal_gamma(2 * b + 1.0);
    const double g3 = specfun::reciprocal_gamma(3 * b + 1.0);
    CHECK(moment2(d, 1, 1) == doctest::Approx(2 * l1 * l2 * g2).epsilon(1e-12));
    CHECK(moment2(d, 1, 2) ==
          doctest::Approx(2 * l1 * l2 * g2 + 6 * l1 * l2 * l2 * g3).epsilon(1e-12));
    CHECK(moment2(d, 0, 2) ==
          doctest::Approx(fpm1d::moment({l2, Beta(b)}, 2)).epsilon(1e-12));
  }
  // Independence at beta = 1.
  const Fpm2D p{1.7, 0.9, Beta(1.0)};
  CHECK(moment2(p, 1, 1) == doctest::Approx(1.7 * 0.9).epsilon(1e-12));
}

TEST_CASE("joint moments against the bivariate series oracle") {
  // Taylor coefficients of E_beta(l1(e^{s1}-1) + l2(e^{s2}-1)) extracted by
  // the graded-series engine: the degree-(n1+n2) moment kernel entry at the
  // bin multiset (n1, n2) times (n1+n2)! is the joint moment.
  const double l1 = 1.25, l2 = 2.1;
  for (double b : {0.35, 0.6, 0.9, 1.0}) {
    const Fpm2D d{l1, l2, Beta(b)};
    const appell::DiscretizedIntensity sigma({l1, l2});
    const auto kernels = appell::moment_kernels(sigma, Beta(b), 6);
    for (int n1 = 0; n1 <= 6; ++n1) {
      for (int n2 = 0; n1 + n2 <= 6; ++n2) {
        const int n = n1 + n2;
        std::vector<int> counts = {n1, n2};
        const double oracle =
            kernels[n][tensor::Layout::get(2, n).rank(counts)].real();
        const double got = moment2(d, n1, n2);
        CHECK(std::abs(got - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
      }
    }
  }
}

TEST_CASE("joint moments against central finite differences of laplace2") {
  const Fpm2D d{1.0, 1.5, Beta(0.65)};
  // Mixed (1,1) derivative via the 4-point stencil, Richardson-extrapolated
  // to kill the O(h^2) term.
  auto stencil = [&](double h) {
    return (laplace2(d, h, h) - laplace2(d, h, -h) - laplace2(d, -h, h) +
            laplace2(d, -h, -h)) /
           (4.0 * h * h);
  };
  const double fd = (4.0 * stencil(1e-3) - stencil(2e-3)) / 3.0;
  CHECK(std::abs(fd - moment2(d, 1, 1)) < 1e-8);
}

TEST_CASE("factorization of joint moments at beta = 1") {
  const Fpm2D p{2.0, 3.0, Beta(1.0)};
  for (int n1 = 0; n1 <= 3; ++n1) {
    for (int n2 = 0; n2 <= 3; ++n2) {
      const double want =
          fpm1d::moment({2.0, Beta(1.0)}, n1) * fpm1d::moment({3.0, Beta(1.0)}, n2);
      CHECK(std::abs(moment2(p, n1, n2) - want) <= 1e-10 * std::max(1.0, want));
    }
  }
}

TEST_CASE("cross-pairing defect F") {
  // Exactly zero on the beta = 1 branch.
  CHECK(f_function(Beta(1.0), 1.0, 1.0) == 0.0);
  CHECK(f_function(Beta(1.0), 2.0, 3.0) == 0.0);
  // Visibly nonzero inside (0, 1).
  CHECK(std::abs(f_function(Beta(0.5), 1.0, 1.0)) > 1e-6);

  // Independent route: Gram-Schmidt coefficients against joint moments.
  const double l1 = 1.0, l2 = 2.0, b = 0.5;
  const auto c1 = fpm1d::orthogonal_polys({l1, Beta(b)}, 1)[1];
  const auto c2 = fpm1d::orthogonal_polys({l2, Beta(b)}, 2)[2];
  const Fpm2D joint{l1, l2, Beta(b)};
  double expect = 0.0;
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j <= 2; ++j) {
      expect += c1.coeffs[i] * c2.coeffs[j] * moment2(joint, i, j);
    }
  }
  CHECK(f_function(Beta(b), l1, l2) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("beta sweep table") {
  const auto rows = f_sweep(0.1, 1.0, 0.05, {{1, 1}, {2, 3}, {1, 2}});
  CHECK(rows.size() == 57);
  int endpoint_rows = 0;
  for (const auto& row : rows) {
    if (row.beta == 1.0) {
      ++endpoint_rows;
      CHECK(std::abs(row.f) < 1e-10);
    }
  }
  CHECK(endpoint_rows == 3);
  CHECK_THROWS_AS(f_sweep(0.5, 0.1, 0.05, {{1, 1}}), DomainError);
}
