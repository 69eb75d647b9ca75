#include "oamq/stats.hpp"

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oamq::stats {

namespace {

// GSL's default error handler aborts the process; rely on return values.
const bool g_gsl_quiet = [] {
  gsl_set_error_handler_off();
  return true;
}();

}  // namespace

double chisq_sf(double x, double dof) {
  if (x < 0 || dof <= 0) throw std::invalid_argument("chisq_sf: bad arguments");
  if (x == 0) return 1.0;
  const double q = gsl_sf_gamma_inc_Q(dof / 2.0, x / 2.0);
  if (std::isnan(q)) return 0.0;  // far-tail underflow
  return std::clamp(q, 0.0, 1.0);
}

double normal_cdf(double z) { return gsl_cdf_ugaussian_P(z); }

double normal_two_sided_p(double z) { return std::erfc(std::fabs(z) / std::sqrt(2.0)); }

double binomial_upper_cl(uint64_t k, uint64_t n, double tail) {
  if (n == 0) throw std::invalid_argument("binomial_upper_cl: n == 0");
  if (k > n) throw std::invalid_argument("binomial_upper_cl: k > n");
  if (!(tail > 0.0 && tail < 1.0)) throw std::invalid_argument("binomial_upper_cl: tail out of (0,1)");
  if (k == n) return 1.0;
  const double p = gsl_cdf_beta_Qinv(tail, static_cast<double>(k) + 1.0, static_cast<double>(n - k));
  if (std::isnan(p)) throw std::runtime_error("binomial_upper_cl: quantile evaluation failed");
  return std::clamp(p, 0.0, 1.0);
}

double fisher_combined_p(const std::vector<double>& pvals) {
  if (pvals.empty()) throw std::invalid_argument("fisher_combined_p: no p-values");
  double stat = 0.0;
  for (double p : pvals) {
    if (p <= 0.0) return 0.0;
    stat += -2.0 * std::log(std::min(p, 1.0));
  }
  return chisq_sf(stat, 2.0 * static_cast<double>(pvals.size()));
}

GofResult chisq_gof(const std::vector<uint64_t>& observed, const std::vector<double>& expected_probs) {
  if (observed.size() != expected_probs.size() || observed.empty())
    throw std::invalid_argument("chisq_gof: size mismatch");
  uint64_t total = 0;
  for (uint64_t c : observed) total += c;
  if (total == 0) throw std::invalid_argument("chisq_gof: empty sample");

  double stat = 0.0;
  int cells = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    const double e = expected_probs[i] * static_cast<double>(total);
    if (expected_probs[i] <= 0.0) {
      if (observed[i] > 0) return {std::numeric_limits<double>::infinity(), 0.0, 0};
      continue;
    }
    const double diff = static_cast<double>(observed[i]) - e;
    stat += diff * diff / e;
    ++cells;
  }
  const int dof = std::max(cells - 1, 1);
  return {stat, chisq_sf(stat, dof), dof};
}

}  // namespace oamq::stats
