#pragma once

#include <cmath>

namespace crscore {

// Neumaier-compensated accumulator. The result of a fixed sequence of
// add() calls is deterministic, which is what makes reported sums
// reproducible byte for byte; callers must not feed it infinities.
class StableSum {
 public:
  StableSum() = default;
  explicit StableSum(double init) : sum_(init) {}

  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace crscore
