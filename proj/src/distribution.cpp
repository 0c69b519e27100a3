#include "crscore/distribution.hpp"

#include <cmath>
#include <string>

#include "crscore/stable_sum.hpp"

namespace crscore {

namespace {

std::string cell_name(int cause, int t) {
  return "mass[" + std::to_string(cause) + "][" + std::to_string(t) + "]";
}

}  // namespace

CompetingRisksDistribution::CompetingRisksDistribution(TimeGrid grid,
                                                       int num_causes,
                                                       std::vector<double> mass,
                                                       double tail)
    : grid_(grid), num_causes_(num_causes), mass_(std::move(mass)), tail_(tail) {
  validate_and_accumulate();
}

CompetingRisksDistribution::CompetingRisksDistribution(
    TimeGrid grid, int num_causes, const std::vector<std::vector<double>>& mass,
    double tail)
    : grid_(grid), num_causes_(num_causes), tail_(tail) {
  if (static_cast<int>(mass.size()) != num_causes)
    throw DimensionMismatchError("expected " + std::to_string(num_causes) +
                                 " mass rows, got " +
                                 std::to_string(mass.size()));
  mass_.reserve(static_cast<std::size_t>(num_causes) * grid_.t_max());
  for (int j = 0; j < num_causes; ++j) {
    if (static_cast<int>(mass[j].size()) != grid_.t_max())
      throw DimensionMismatchError(
          "mass row " + std::to_string(j + 1) + " has " +
          std::to_string(mass[j].size()) + " entries, expected t_max=" +
          std::to_string(grid_.t_max()));
    mass_.insert(mass_.end(), mass[j].begin(), mass[j].end());
  }
  validate_and_accumulate();
}

void CompetingRisksDistribution::validate_and_accumulate() {
  const int t_max = grid_.t_max();
  if (num_causes_ < 1)
    throw DimensionMismatchError("num_causes must be >= 1, got " +
                                 std::to_string(num_causes_));
  const std::size_t expected =
      static_cast<std::size_t>(num_causes_) * t_max;
  if (mass_.size() != expected)
    throw DimensionMismatchError("expected " + std::to_string(expected) +
                                 " mass entries, got " +
                                 std::to_string(mass_.size()));

  StableSum total;
  for (int j = 1; j <= num_causes_; ++j) {
    for (int t = 1; t <= t_max; ++t) {
      const double v = mass_[index(j, t)];
      if (!(v >= 0.0))
        throw NegativeMassError(cell_name(j, t) + " = " + std::to_string(v));
      total.add(v);
    }
  }
  if (!(tail_ >= 0.0))
    throw NegativeMassError("tail = " + std::to_string(tail_));
  total.add(tail_);
  const double sum = total.value();
  if (std::fabs(sum - 1.0) > kNormalizationTol)
    throw NotNormalizedError("mass + tail sums to " + std::to_string(sum) +
                             " (|sum - 1| > 1e-9)");

  // Prefix sums, once, in a fixed order: F_j(t) per cause, then F(t) as
  // the cause sum at each t. All later queries are lookups.
  cum_cause_.resize(mass_.size());
  cum_all_.resize(t_max);
  for (int j = 1; j <= num_causes_; ++j) {
    double run = 0.0;
    for (int t = 1; t <= t_max; ++t) {
      run += mass_[index(j, t)];
      cum_cause_[index(j, t)] = run;
    }
  }
  for (int t = 1; t <= t_max; ++t) {
    double f = 0.0;
    for (int j = 1; j <= num_causes_; ++j) f += cum_cause_[index(j, t)];
    cum_all_[t - 1] = f;
  }
}

double CompetingRisksDistribution::mass(int cause, int t) const {
  if (cause < 1 || cause > num_causes_)
    throw IndexOutOfRangeError("cause " + std::to_string(cause) +
                               " outside 1.." + std::to_string(num_causes_));
  if (t < 1 || t > grid_.t_max())
    throw IndexOutOfRangeError("time " + std::to_string(t) + " outside 1.." +
                               std::to_string(grid_.t_max()));
  return mass_[index(cause, t)];
}

double CompetingRisksDistribution::cif(int cause, int t) const {
  if (cause < 1 || cause > num_causes_)
    throw IndexOutOfRangeError("cause " + std::to_string(cause) +
                               " outside 1.." + std::to_string(num_causes_));
  if (t < 1 || t > grid_.t_max())
    throw IndexOutOfRangeError("time " + std::to_string(t) + " outside 1.." +
                               std::to_string(grid_.t_max()));
  return cum_cause_[index(cause, t)];
}

double CompetingRisksDistribution::overall_cdf(int t) const {
  if (t < 1 || t > grid_.t_max())
    throw IndexOutOfRangeError("time " + std::to_string(t) + " outside 1.." +
                               std::to_string(grid_.t_max()));
  return cum_all_[t - 1];
}

double CompetingRisksDistribution::survivor(int t) const {
  const double s = 1.0 - overall_cdf(t);
  return s > 0.0 ? s : 0.0;
}

CensoringDistribution::CensoringDistribution(TimeGrid grid,
                                             std::vector<double> mass)
    : grid_(grid), mass_(std::move(mass)) {
  const int t_max = grid_.t_max();
  if (static_cast<int>(mass_.size()) != t_max)
    throw DimensionMismatchError("expected " + std::to_string(t_max) +
                                 " censoring masses, got " +
                                 std::to_string(mass_.size()));
  StableSum total;
  for (int t = 1; t <= t_max; ++t) {
    const double v = mass_[t - 1];
    if (!(v >= 0.0))
      throw NegativeMassError("censoring mass[" + std::to_string(t) +
                              "] = " + std::to_string(v));
    total.add(v);
  }
  const double sum = total.value();
  if (std::fabs(sum - 1.0) > kNormalizationTol)
    throw NotNormalizedError("censoring mass sums to " + std::to_string(sum) +
                             " (|sum - 1| > 1e-9)");

  suffix_.resize(t_max);
  double run = 0.0;
  for (int t = t_max; t >= 1; --t) {
    run += mass_[t - 1];
    suffix_[t - 1] = run;
  }
}

double CensoringDistribution::mass(int t) const {
  if (t < 1 || t > grid_.t_max())
    throw IndexOutOfRangeError("time " + std::to_string(t) + " outside 1.." +
                               std::to_string(grid_.t_max()));
  return mass_[t - 1];
}

double CensoringDistribution::survival_from(int y) const {
  if (y < 1 || y > grid_.t_max())
    throw IndexOutOfRangeError("time " + std::to_string(y) + " outside 1.." +
                               std::to_string(grid_.t_max()));
  return suffix_[y - 1];
}

}  // namespace crscore
