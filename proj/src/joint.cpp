#include "crscore/joint.hpp"

#include <string>

#include "crscore/stable_sum.hpp"

namespace crscore {

JointOutcomeDistribution::JointOutcomeDistribution(TimeGrid grid,
                                                   int num_causes,
                                                   std::vector<double> pmf)
    : grid_(grid), num_causes_(num_causes), pmf_(std::move(pmf)) {
  if (num_causes_ < 1)
    throw DimensionMismatchError("num_causes must be >= 1, got " +
                                 std::to_string(num_causes_));
  const std::size_t expected =
      static_cast<std::size_t>(num_causes_ + 1) * grid_.t_max();
  if (pmf_.size() != expected)
    throw DimensionMismatchError("expected " + std::to_string(expected) +
                                 " pmf entries, got " +
                                 std::to_string(pmf_.size()));
  for (double v : pmf_)
    if (!(v >= 0.0))
      throw NegativeMassError("outcome pmf entry " + std::to_string(v));
}

double JointOutcomeDistribution::pmf(int cause, int y) const {
  if (cause < 0 || cause > num_causes_)
    throw IndexOutOfRangeError("cause " + std::to_string(cause) +
                               " outside 0.." + std::to_string(num_causes_));
  if (y < 1 || y > grid_.t_max())
    throw IndexOutOfRangeError("time " + std::to_string(y) + " outside 1.." +
                               std::to_string(grid_.t_max()));
  return pmf_[index(cause, y)];
}

double JointOutcomeDistribution::total() const {
  StableSum sum;
  for (double v : pmf_) sum.add(v);
  return sum.value();
}

JointOutcomeDistribution joint_pmf(const CompetingRisksDistribution& forecast,
                                   const CensoringDistribution& censoring) {
  if (!(forecast.grid() == censoring.grid()))
    throw GridMismatchError(
        "forecast and censoring distributions use different grids");

  const int t_max = forecast.grid().t_max();
  const int m = forecast.num_causes();
  std::vector<double> pmf(static_cast<std::size_t>(m + 1) * t_max, 0.0);

  for (int y = 1; y <= t_max; ++y)
    pmf[y - 1] = forecast.survivor(y) * censoring.mass(y);
  for (int j = 1; j <= m; ++j)
    for (int y = 1; y <= t_max; ++y)
      pmf[static_cast<std::size_t>(j) * t_max + (y - 1)] =
          forecast.mass(j, y) * censoring.survival_from(y);

  return JointOutcomeDistribution(forecast.grid(), m, std::move(pmf));
}

}  // namespace crscore
