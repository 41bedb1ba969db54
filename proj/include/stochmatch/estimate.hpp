#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>

namespace stochmatch {

/// Monte-Carlo estimate of an expectation.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(trials)
  std::size_t trials = 0;
  std::pair<double, double> ci95{0.0, 0.0};
  std::uint64_t seed = 0;
};

/// Paired estimate of alg/opt.
struct RatioEstimate {
  Estimate alg;
  Estimate opt;
  double ratio = 0.0;
  double ratio_stderr = 0.0;
};

namespace detail {

// Neumaier-compensated sum in index order.
inline double compensated_sum(std::span<const double> xs) {
  double sum = 0.0;
  double c = 0.0;
  for (double x : xs) {
    double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      c += (sum - t) + x;
    } else {
      c += (x - t) + sum;
    }
    sum = t;
  }
  return sum + c;
}

}  // namespace detail

/// Sample mean, standard error (sample stddev / sqrt(T)) and mean +- 1.96 se.
inline Estimate summarize(std::span<const double> samples, std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("an estimate needs at least one trial");
  const double t = static_cast<double>(samples.size());
  const double mean = detail::compensated_sum(samples) / t;
  double se = 0.0;
  if (samples.size() > 1) {
    double ss = 0.0;
    double c = 0.0;
    for (double x : samples) {
      double y = (x - mean) * (x - mean) - c;
      double s2 = ss + y;
      c = (s2 - ss) - y;
      ss = s2;
    }
    se = std::sqrt(ss / (t - 1.0)) / std::sqrt(t);
  }
  Estimate e;
  e.mean = mean;
  e.std_error = se;
  e.trials = samples.size();
  e.ci95 = {mean - 1.96 * se, mean + 1.96 * se};
  e.seed = seed;
  return e;
}

}  // namespace stochmatch
