#ifndef FPM_STATS_HPP
#define FPM_STATS_HPP

#include <vector>

namespace fpm::stats {

/// Regularized lower incomplete gamma P(a, x) (series for x < a+1,
/// continued fraction otherwise).
double regularized_gamma_p(double a, double x);
/// Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Chi-square survival function P(X > stat) with dof degrees of freedom.
double chi_square_sf(double stat, int dof);

struct GofResult {
  double stat = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness-of-fit of observed category counts against expected
/// probabilities (n = total count). Cells with expected count below
/// min_expected are merged into their right neighbor (the tail cell last).
GofResult chi_square_gof(const std::vector<long>& observed,
                         const std::vector<double>& probs, double min_expected = 5.0);

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};
MeanSe mean_se(const std::vector<double>& xs);

}  // namespace fpm::stats

#endif
