#pragma once

#include <cmath>

namespace myerson {

// Neumaier-compensated accumulator: keeps long Monte Carlo sums accurate
// independent of summand magnitude ordering.
struct KahanAccumulator {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + compensation; }
};

}  // namespace myerson
