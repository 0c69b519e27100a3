#pragma once

#include <vector>

#include "crscore/types.hpp"

namespace crscore {

// Forecast distribution for (T, J) on a finite grid: sub-distribution
// masses f_j(t) for causes j = 1..M and times t = 1..t_max, plus the
// explicit beyond-horizon mass Q(T > t_max) stored as `tail`.
//
// Construction validates (entries non-negative, total within 1e-9 of one)
// and keeps the supplied values verbatim; nothing is ever renormalized.
// Instances are immutable and safe to share across threads.
class CompetingRisksDistribution {
 public:
  static constexpr double kNormalizationTol = 1e-9;

  // `mass` is row-major with M rows of t_max entries, mass[j-1][t-1] = f_j(t).
  CompetingRisksDistribution(TimeGrid grid, int num_causes,
                             std::vector<double> mass, double tail);

  CompetingRisksDistribution(TimeGrid grid, int num_causes,
                             const std::vector<std::vector<double>>& mass,
                             double tail);

  const TimeGrid& grid() const { return grid_; }
  int num_causes() const { return num_causes_; }
  double tail() const { return tail_; }

  // f_j(t) = Q(T = t, J = j). Cause and time are 1-based.
  double mass(int cause, int t) const;

  // Cumulative incidence F_j(t) = Q(T <= t, J = j); nondecreasing in t.
  double cif(int cause, int t) const;

  // F(t) = sum_j F_j(t).
  double overall_cdf(int t) const;

  // Q(T > t) = 1 - F(t), floored at zero so rounding can never make the
  // survivor probability negative. This is the probability scored by a
  // censored observation at t.
  double survivor(int t) const;

  // Row-major view of the stored masses, exactly as supplied.
  const std::vector<double>& flat_mass() const { return mass_; }

  bool same_shape(const CompetingRisksDistribution& other) const {
    return grid_ == other.grid_ && num_causes_ == other.num_causes_;
  }

  friend bool operator==(const CompetingRisksDistribution& a,
                         const CompetingRisksDistribution& b) {
    return a.grid_ == b.grid_ && a.num_causes_ == b.num_causes_ &&
           a.mass_ == b.mass_ && a.tail_ == b.tail_;
  }

 private:
  void validate_and_accumulate();
  std::size_t index(int cause, int t) const {
    return static_cast<std::size_t>(cause - 1) * grid_.t_max() + (t - 1);
  }

  TimeGrid grid_;
  int num_causes_;
  std::vector<double> mass_;       // [cause-1][t-1], row-major
  std::vector<double> cum_cause_;  // F_j(t), same layout
  std::vector<double> cum_all_;    // F(t), index t-1
  double tail_;
};

// Censoring-time pmf, fully supported on the grid: mass[t-1] = G(C = t)
// with the masses summing to one within 1e-9. End-of-study censoring is
// expressed as mass at t_max. Immutable after construction.
class CensoringDistribution {
 public:
  static constexpr double kNormalizationTol = 1e-9;

  CensoringDistribution(TimeGrid grid, std::vector<double> mass);

  const TimeGrid& grid() const { return grid_; }

  // G(C = t), 1-based.
  double mass(int t) const;

  // G(C >= y), nonincreasing in y; a suffix sum of the stored masses.
  double survival_from(int y) const;

  const std::vector<double>& flat_mass() const { return mass_; }

 private:
  TimeGrid grid_;
  std::vector<double> mass_;
  std::vector<double> suffix_;  // G(C >= t), index t-1
};

}  // namespace crscore
