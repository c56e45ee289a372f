#pragma once

#include <span>
#include <vector>

namespace gamboost {

// One-covariate OLS fit (with intercept) to a negative-gradient vector.
struct FittedBaseLearner {
  int covariate = -1;
  double intercept = 0.0;
  double slope = 0.0;
  std::vector<double> fitted;  // h_i = intercept + slope * x_i
  double ssr = 0.0;            // sum (u_i - h_i)^2
  double sqnorm = 0.0;         // sum h_i^2
};

// Ordinary least squares of u on x. A constant x yields slope 0 and
// intercept mean(u).
FittedBaseLearner fit_linear(std::span<const double> u, std::span<const double> x);

// Best-fitting column by sum of squared residuals; ties go to the lowest
// column index.
FittedBaseLearner select_best(std::span<const double> u,
                              const std::vector<std::vector<double>>& columns);

}  // namespace gamboost
