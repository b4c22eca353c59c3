#include "fpm/process.hpp"

#include <cmath>

namespace fpm::process {

Partition make_axis_partition(const Window& win, int bins) {
  if (bins < 1) throw DomainError("make_axis_partition: need >= 1 bin");
  Partition p;
  p.lo = win.lo[0];
  p.hi = win.hi[0];
  p.bins = bins;
  p.mass_per_bin = win.mass() / bins;
  return p;
}

Configuration sample_configuration(const Window& win, specfun::Beta beta, Rng& rng) {
  const double tau = specfun::sample_nu_beta(beta, rng);
  const long n = rng.poisson(tau * win.mass());
  Configuration config;
  config.points.reserve(n);
  const int d = win.dim();
  for (long i = 0; i < n; ++i) {
    std::vector<double> x(d);
    for (int a = 0; a < d; ++a) {
      x[a] = win.lo[a] + (win.hi[a] - win.lo[a]) * rng.uniform();
    }
    config.points.push_back(std::move(x));
  }
  return config;
}

std::vector<long> bin_counts(const Configuration& config, const Partition& part) {
  std::vector<long> counts(part.bins, 0);
  for (const auto& x : config.points) ++counts[part.locate(x[0])];
  return counts;
}

CharFunctionalEstimate empirical_char_functional(
    const std::vector<std::vector<long>>& counts, const std::vector<double>& phi) {
  if (counts.empty()) throw DomainError("empirical_char_functional: no samples");
  double sum_re = 0.0, sum_im = 0.0, sum_re2 = 0.0, sum_im2 = 0.0;
  for (const auto& c : counts) {
    if (c.size() != phi.size()) {
      throw DomainError("empirical_char_functional: bin/step size mismatch");
    }
    double dot = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) dot += double(c[j]) * phi[j];
    const double re = std::cos(dot), im = std::sin(dot);
    sum_re += re;
    sum_im += im;
    sum_re2 += re * re;
    sum_im2 += im * im;
  }
  const double n = static_cast<double>(counts.size());
  CharFunctionalEstimate est;
  est.mean = {sum_re / n, sum_im / n};
  const double var_re = std::max(sum_re2 / n - (sum_re / n) * (sum_re / n), 0.0);
  const double var_im = std::max(sum_im2 / n - (sum_im / n) * (sum_im / n), 0.0);
  est.se_re = std::sqrt(var_re / n);
  est.se_im = std::sqrt(var_im / n);
  return est;
}

}  // namespace fpm::process
