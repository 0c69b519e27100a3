#pragma once

#include <vector>

#include "crscore/distribution.hpp"
#include "crscore/types.hpp"

namespace crscore {

// Probability mass function over the observable outcome space
// {1..t_max} x {censored, cause 1..M}. Row 0 is the censored row; rows
// 1..M are event rows. Produced by joint_pmf() and empirical_joint().
class JointOutcomeDistribution {
 public:
  // `pmf` is row-major with (M+1) rows of t_max entries, pmf[cause][y-1].
  JointOutcomeDistribution(TimeGrid grid, int num_causes,
                           std::vector<double> pmf);

  const TimeGrid& grid() const { return grid_; }
  int num_causes() const { return num_causes_; }

  // pi(Y = y, cause); cause ranges 0..M, y ranges 1..t_max.
  double pmf(int cause, int y) const;

  // Compensated sum of all entries in storage order.
  double total() const;

  const std::vector<double>& flat() const { return pmf_; }

  bool same_shape(const JointOutcomeDistribution& other) const {
    return grid_ == other.grid_ && num_causes_ == other.num_causes_;
  }

 private:
  std::size_t index(int cause, int y) const {
    return static_cast<std::size_t>(cause) * grid_.t_max() + (y - 1);
  }

  TimeGrid grid_;
  int num_causes_;
  std::vector<double> pmf_;
};

// Exact enumeration of the observation-space pmf induced by a forecast Q
// and an independent on-grid censoring distribution G:
//
//   pi(j, y) = f_j(y) * G(C >= y)       events, j = 1..M
//   pi(0, y) = (1 - F(y)) * G(C = y)    censored outcomes
//
// Because G is fully supported on the grid the entries sum to one, up to
// floating-point rounding.
JointOutcomeDistribution joint_pmf(const CompetingRisksDistribution& forecast,
                                   const CensoringDistribution& censoring);

}  // namespace crscore
