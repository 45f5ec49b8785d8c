#include "symcirc/regression.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace symcirc;

TEST_CASE("exact line") {
  std::vector<double> x{0, 1, 2, 3, 4}, y;
  for (double v : x) y.push_back(1.5 - 0.25 * v);
  const LineFit f = fit_line(x, y);
  CHECK(f.slope == doctest::Approx(-0.25));
  CHECK(f.intercept == doctest::Approx(1.5));
  CHECK(f.slope_stderr == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.r_squared == doctest::Approx(1.0));
}

TEST_CASE("slope standard error against a hand computation") {
  // residuals +-1 alternating around y = x: rss = 4, sxx = 10 (x = 0..4 has mean 2)
  std::vector<double> x{0, 1, 2, 3, 4}, y{1, 0, 3, 2, 5};
  const LineFit f = fit_line(x, y);
  double sxx = 10, mx = 2, my = 2.2;
  double sxy = 0;
  for (int i = 0; i < 5; ++i) sxy += (x[i] - mx) * (y[i] - my);
  const double slope = sxy / sxx;
  double rss = 0;
  for (int i = 0; i < 5; ++i) {
    const double r = y[i] - (my - slope * mx) - slope * x[i];
    rss += r * r;
  }
  CHECK(f.slope == doctest::Approx(slope));
  CHECK(f.slope_stderr == doctest::Approx(std::sqrt(rss / 3 / sxx)));
}

TEST_CASE("fit_line rejects degenerate input") {
  std::vector<double> two{0, 1};
  CHECK_THROWS_AS(fit_line(two, two), std::invalid_argument);
  std::vector<double> same{1, 1, 1}, y{0, 1, 2};
  CHECK_THROWS_AS(fit_line(same, y), std::invalid_argument);
}

TEST_CASE("jackknife of the mean equals the standard error of the mean") {
  std::vector<double> data{1.0, 4.0, 2.5, 3.0, 7.0, 0.5};
  const double n = static_cast<double>(data.size());
  double total = 0;
  for (double v : data) total += v;
  std::vector<double> reps;
  for (double v : data) reps.push_back((total - v) / (n - 1));
  const double mean = total / n;
  double ss = 0;
  for (double v : data) ss += (v - mean) * (v - mean);
  CHECK(jackknife_stderr(reps) == doctest::Approx(std::sqrt(ss / (n - 1) / n)));
}

TEST_CASE("weighted moments of a two-point distribution") {
  // P(0) = 0.8, P(2) = 0.2 at positions 10..12
  std::vector<double> w{0.8, 0.0, 0.2};
  const Moments m = weighted_moments(w, 10);
  CHECK(m.mean == doctest::Approx(10.4));
  CHECK(m.variance == doctest::Approx(4 * 0.16));
  // Bernoulli skewness (1-2p)/sqrt(p(1-p)) with p = 0.2
  CHECK(m.skewness == doctest::Approx(0.6 / 0.4));
  std::vector<double> zero{0, 0};
  CHECK_THROWS(weighted_moments(zero, 0));
}
