#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crscore/errors.hpp"

namespace crscore {

// Discrete time grid; observable times are the integers 1..t_max.
class TimeGrid {
 public:
  explicit TimeGrid(int t_max) : t_max_(t_max) {
    if (t_max_ < 1)
      throw IndexOutOfRangeError("t_max must be >= 1, got " +
                                 std::to_string(t_max_));
  }

  int t_max() const { return t_max_; }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  int t_max_;
};

// One censored data point: the observed time y = min(T, C) and the cause
// that produced it (0 = censored, 1..M = failure from that cause). Ties
// T = C count as events, so cause 0 means C < T or T beyond the horizon.
struct Observation {
  int y = 1;
  int cause = 0;

  friend bool operator==(const Observation&, const Observation&) = default;
};

// Observations bound to one grid and cause count. Validated on
// construction; an empty observation list is allowed here and rejected by
// the operations that need data.
class Dataset {
 public:
  Dataset(TimeGrid grid, int num_causes, std::vector<Observation> observations)
      : grid_(grid),
        num_causes_(num_causes),
        observations_(std::move(observations)) {
    if (num_causes_ < 1)
      throw DimensionMismatchError("num_causes must be >= 1, got " +
                                   std::to_string(num_causes_));
    for (std::size_t i = 0; i < observations_.size(); ++i) {
      const Observation& obs = observations_[i];
      if (obs.y < 1 || obs.y > grid_.t_max())
        throw GridMismatchError("observation " + std::to_string(i) +
                                " has y=" + std::to_string(obs.y) +
                                " outside 1.." + std::to_string(grid_.t_max()));
      if (obs.cause < 0 || obs.cause > num_causes_)
        throw CauseOutOfRangeError(
            "observation " + std::to_string(i) + " has cause=" +
            std::to_string(obs.cause) + " outside 0.." +
            std::to_string(num_causes_));
    }
  }

  const TimeGrid& grid() const { return grid_; }
  int num_causes() const { return num_causes_; }
  const std::vector<Observation>& observations() const { return observations_; }
  std::size_t size() const { return observations_.size(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  TimeGrid grid_;
  int num_causes_;
  std::vector<Observation> observations_;
};

}  // namespace crscore
