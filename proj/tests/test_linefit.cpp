#include "dlc/linefit.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace dlc;

TEST_CASE("exact line is recovered with R^2 = 1") {
  const std::vector<SamplePair> samples = {{0, 1}, {1, 3}, {2, 5}};
  const FitResult fit = fit_line(samples);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.n_samples == 3);
}

TEST_CASE("hand-evaluated normal equations") {
  const std::vector<SamplePair> samples = {{0, 0}, {1, 1}, {2, 0}};
  const FitResult fit = fit_line(samples);
  CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("refitting an exact fitted line recovers its coefficients") {
  // y = 0.541 x - 0.231 sampled at a few received powers
  std::vector<SamplePair> samples;
  for (double x : {5.0, 10.0, 15.0, 20.0}) {
    samples.push_back({x, 0.541 * x - 0.231});
  }
  const FitResult fit = fit_line(samples);
  CHECK(fit.slope == doctest::Approx(0.541).epsilon(1e-9));
  CHECK(fit.intercept == doctest::Approx(-0.231).epsilon(1e-9));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("degenerate inputs rejected") {
  CHECK_THROWS_AS(fit_line(std::vector<SamplePair>{{1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_line(std::vector<SamplePair>{{1, 2}, {1, 5}, {1, 9}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      fit_line(std::vector<SamplePair>{{0, 1}, {1, std::nan("")}}),
      std::invalid_argument);
}

TEST_CASE("residual orthogonality") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ux(0.0, 20.0);
  std::normal_distribution<double> noise(0.0, 0.5);
  std::vector<SamplePair> samples;
  for (int i = 0; i < 50; ++i) {
    const double x = ux(rng);
    samples.push_back({x, 1.7 * x - 3.0 + noise(rng)});
  }
  const FitResult fit = fit_line(samples);
  double sum_res = 0.0, sum_xres = 0.0;
  for (const SamplePair& s : samples) {
    const double res = s.y - (fit.slope * s.x + fit.intercept);
    sum_res += res;
    sum_xres += s.x * res;
  }
  CHECK(std::abs(sum_res) < 1e-9);
  CHECK(std::abs(sum_xres) < 1e-9 * 50 * 20);
}

TEST_CASE("affine equivariance of the fit") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<SamplePair> base;
  for (int i = 0; i < 30; ++i) base.push_back({u(rng), u(rng)});
  const FitResult f0 = fit_line(base);

  const double c = 2.5, d = -1.25;
  std::vector<SamplePair> scaled;
  for (const SamplePair& s : base) scaled.push_back({s.x, c * s.y + d});
  const FitResult f1 = fit_line(scaled);
  CHECK(f1.slope == doctest::Approx(c * f0.slope).epsilon(1e-10));
  CHECK(f1.intercept == doctest::Approx(c * f0.intercept + d).epsilon(1e-10));
}
