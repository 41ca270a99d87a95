#pragma once

#include <cmath>
#include <cstdint>

namespace privmarket {

/// Single-pass mean/variance accumulator (Welford), mergeable so that
/// independently accumulated chunks can be reduced in a fixed order.
struct RunningMoments {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const RunningMoments& other) {
    if (other.n == 0) return;
    if (n == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(other.n);
    const double delta = other.mean - mean;
    const double nab = na + nb;
    mean += delta * nb / nab;
    m2 += other.m2 + delta * delta * na * nb / nab;
    n += other.n;
  }

  /// Sample variance (n-1 denominator); 0 for fewer than two samples.
  double variance() const {
    return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  }

  double stddev() const { return std::sqrt(variance()); }

  /// Standard error of the mean; 0 for fewer than two samples.
  double stderr_of_mean() const {
    return n > 1 ? stddev() / std::sqrt(static_cast<double>(n)) : 0.0;
  }
};

}  // namespace privmarket
