#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bqsm {

/// sqrt(p (1 - p) / trials).
double binomial_sigma(double p, std::size_t trials);

/// One-sided check: rate <= bound + 3 sigma, with sigma taken at the bound.
bool within_bound(double rate, double bound, std::size_t trials);
/// One-sided check: rate >= floor - 3 sigma, with sigma taken at the floor.
bool above_floor(double rate, double floor, std::size_t trials);

struct DistanceEstimate {
  double estimate = 0.0;  // P1(E) - P2(E) on the held-out half
  double radius = 0.0;    // 3 sigma
  std::size_t trials = 0;

  double lo() const { return estimate - radius; }
  double hi() const { return estimate + radius; }
  bool contains_zero() const { return lo() <= 0.0 && 0.0 <= hi(); }
  double width() const { return 2.0 * radius; }
};

/// Split-sample lower estimate of the statistical distance between the
/// distributions behind two samples of view keys. The first half of each
/// sample selects E = {v : p1(v) > p2(v)}; the second half estimates
/// P1(E) - P2(E). Both samples must have the same size.
DistanceEstimate split_sample_distance(const std::vector<std::string>& sample1,
                                       const std::vector<std::string>& sample2);

}  // namespace bqsm
