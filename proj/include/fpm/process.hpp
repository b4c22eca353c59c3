#ifndef FPM_PROCESS_HPP
#define FPM_PROCESS_HPP

#include <complex>
#include <vector>

#include "fpm/rng.hpp"
#include "fpm/specfun.hpp"

namespace fpm::process {

/// Axis-aligned box window with a constant intensity density c, so the
/// intensity mass is sigma(window) = c * volume.
struct Window {
  std::vector<double> lo;
  std::vector<double> hi;
  double intensity = 1.0;

  Window(std::vector<double> lo_, std::vector<double> hi_, double c)
      : lo(std::move(lo_)), hi(std::move(hi_)), intensity(c) {
    if (lo.size() != hi.size() || lo.empty()) throw DomainError("Window: bad corners");
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (!(hi[i] > lo[i])) throw DomainError("Window: empty extent");
    }
    if (!(c > 0.0)) throw DomainError("Window: intensity must be > 0");
  }
  int dim() const { return static_cast<int>(lo.size()); }
  double volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
  }
  double mass() const { return intensity * volume(); }
};

/// Finite point set inside the window.
struct Configuration {
  std::vector<std::vector<double>> points;
  long size() const { return static_cast<long>(points.size()); }
};

/// Equal-width slab partition of the window along axis 0; the bin masses
/// are the step-function bridge into the tensor algebra modules.
struct Partition {
  double lo = 0.0;
  double hi = 1.0;
  int bins = 1;
  double mass_per_bin = 0.0;

  int locate(double x) const {
    const double t = (x - lo) / (hi - lo) * bins;
    int b = static_cast<int>(t);
    if (b < 0) b = 0;
    if (b >= bins) b = bins - 1;  // right edge belongs to the last bin
    return b;
  }
  std::vector<double> masses() const {
    return std::vector<double>(bins, mass_per_bin);
  }
};

Partition make_axis_partition(const Window& win, int bins);

/// One draw of the process on the window: tau ~ nu_beta, then a Poisson
/// number of points with mean tau * sigma(window), placed i.i.d. uniformly.
/// The count law is P(N = n) = E_beta^{(n)}(-sigma) sigma^n / n!.
Configuration sample_configuration(const Window& win, specfun::Beta beta, Rng& rng);

/// Counts per partition bin; sums to the configuration size.
std::vector<long> bin_counts(const Configuration& config, const Partition& part);

/// Average of exp(i <gamma, phi>) over samples, phi a step function on the
/// partition (so <gamma, phi> = sum_j N_j phi_j). The matching closed form
/// is E_beta(sum_j sigma_j (e^{i phi_j} - 1)). Also reports the standard
/// errors of the real and imaginary parts.
struct CharFunctionalEstimate {
  std::complex<double> mean;
  double se_re = 0.0;
  double se_im = 0.0;
};
CharFunctionalEstimate empirical_char_functional(
    const std::vector<std::vector<long>>& counts, const std::vector<double>& phi);

}  // namespace fpm::process

#endif
