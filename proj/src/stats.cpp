#include "bqsm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bqsm {

double binomial_sigma(double p, std::size_t trials) {
  if (trials == 0) return 0.0;
  p = std::clamp(p, 0.0, 1.0);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

bool within_bound(double rate, double bound, std::size_t trials) {
  return rate <= bound + 3.0 * binomial_sigma(bound, trials);
}

bool above_floor(double rate, double floor, std::size_t trials) {
  return rate >= floor - 3.0 * binomial_sigma(floor, trials);
}

DistanceEstimate split_sample_distance(const std::vector<std::string>& sample1,
                                       const std::vector<std::string>& sample2) {
  if (sample1.size() != sample2.size() || sample1.size() < 4) {
    throw std::invalid_argument("split_sample_distance: need two equal samples of at least 4 keys");
  }
  const std::size_t half = sample1.size() / 2;
  std::unordered_map<std::string, long> diff;
  for (std::size_t i = 0; i < half; ++i) {
    ++diff[sample1[i]];
    --diff[sample2[i]];
  }
  std::unordered_set<std::string> event;
  for (const auto& [key, d] : diff) {
    if (d > 0) event.insert(key);
  }
  const std::size_t held = sample1.size() - half;
  std::size_t in1 = 0, in2 = 0;
  for (std::size_t i = half; i < sample1.size(); ++i) {
    in1 += event.count(sample1[i]);
    in2 += event.count(sample2[i]);
  }
  const double p1 = static_cast<double>(in1) / static_cast<double>(held);
  const double p2 = static_cast<double>(in2) / static_cast<double>(held);
  DistanceEstimate est;
  est.estimate = p1 - p2;
  // Variance of a difference of two independent proportions; floored at the
  // worst case p = 1/2 so an empty event does not give a zero-width interval.
  const double var = std::max(p1 * (1 - p1) + p2 * (1 - p2), 0.5) / static_cast<double>(held);
  est.radius = 3.0 * std::sqrt(var);
  est.trials = sample1.size();
  return est;
}

}  // namespace bqsm
