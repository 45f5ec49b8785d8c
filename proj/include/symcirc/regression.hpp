#pragma once

#include <span>
#include <vector>

namespace symcirc {

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double slope_stderr = 0;
  double r_squared = 0;
};

// Ordinary least squares y = intercept + slope * x; needs at least 3 points.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Delete-one jackknife standard error from leave-one-out replicates.
double jackknife_stderr(std::span<const double> replicates);

struct Moments {
  double mean = 0;
  double variance = 0;
  double skewness = 0;
};

// Moments of a distribution given by weights on integer positions.
Moments weighted_moments(std::span<const double> weights, int first_position);

} // namespace symcirc
