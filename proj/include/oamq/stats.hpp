#pragma once
#include <cstdint>
#include <vector>

namespace oamq::stats {

// Survival function of the chi-square distribution with `dof` degrees of
// freedom, i.e. the upper-tail p-value of a chi-square statistic.
double chisq_sf(double x, double dof);

// Standard normal CDF.
double normal_cdf(double z);

// Two-sided normal p-value for a z statistic: erfc(|z|/sqrt(2)).
double normal_two_sided_p(double z);

// One-sided Clopper-Pearson upper confidence limit for a binomial
// proportion: the smallest p with P(Bin(n,p) <= k) <= tail.
double binomial_upper_cl(uint64_t k, uint64_t n, double tail);

// Fisher's method: combines independent p-values into one.
double fisher_combined_p(const std::vector<double>& pvals);

// Pearson goodness-of-fit: observed counts against expected probabilities.
// Categories with zero expected probability and zero observed count are
// skipped; observed mass on a zero-probability category yields p = 0.
struct GofResult {
  double statistic;
  double p_value;
  int dof;
};
GofResult chisq_gof(const std::vector<uint64_t>& observed, const std::vector<double>& expected_probs);

}  // namespace oamq::stats
