#include "symcirc/regression.hpp"

#include <cmath>
#include <stdexcept>

namespace symcirc {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw std::invalid_argument("fit_line: x and y differ in length");
  if (n < 3) throw std::invalid_argument("fit_line: need at least 3 points");

  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit_line: degenerate abscissae");

  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - f.intercept - f.slope * x[i];
    rss += r * r;
  }
  f.slope_stderr = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
  f.r_squared = syy > 0 ? 1.0 - rss / syy : 1.0;
  return f;
}

double jackknife_stderr(std::span<const double> replicates) {
  const std::size_t b = replicates.size();
  if (b < 2) throw std::invalid_argument("jackknife needs at least 2 replicates");
  double mean = 0;
  for (double r : replicates) mean += r;
  mean /= b;
  double ss = 0;
  for (double r : replicates) ss += (r - mean) * (r - mean);
  return std::sqrt(ss * static_cast<double>(b - 1) / static_cast<double>(b));
}

Moments weighted_moments(std::span<const double> weights, int first_position) {
  double w = 0, m1 = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    w += weights[i];
    m1 += weights[i] * (first_position + static_cast<double>(i));
  }
  if (w <= 0) throw std::invalid_argument("weighted_moments: empty distribution");
  Moments out;
  out.mean = m1 / w;
  double m2 = 0, m3 = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double dx = first_position + static_cast<double>(i) - out.mean;
    m2 += weights[i] * dx * dx;
    m3 += weights[i] * dx * dx * dx;
  }
  out.variance = m2 / w;
  out.skewness = out.variance > 0 ? (m3 / w) / std::pow(out.variance, 1.5) : 0.0;
  return out;
}

} // namespace symcirc
