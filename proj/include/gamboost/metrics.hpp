#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamboost/model.hpp"

namespace gamboost {

// Ground truth of a simulated setting: per-parameter intercepts, slope
// vectors (zeros on noise covariates) and the implied informative sets.
struct SimTruth {
  std::array<double, kNumParams> intercepts{};
  std::array<std::vector<double>, kNumParams> slopes;

  std::vector<int> informative(int param) const;
};

struct SelectionMetrics {
  std::array<int, kNumParams> selected{};
  double scr = 0.0;  // +inf when the denominator predictor is empty
  std::array<int, kNumParams> false_positives{};
  std::array<int, kNumParams> false_negatives{};
};

// A covariate counts as selected for a parameter iff its accumulated slope
// is nonzero. SCR direction follows the family convention: mu/sigma
// (Gaussian), alpha/mu (negative binomial), lambda/k (Weibull).
SelectionMetrics selection_metrics(const FittedModel& model, const SimTruth& truth);

struct CoefficientRow {
  std::string parameter;
  std::string covariate;  // "(Intercept)" or a column name
  double estimate = 0.0;
  std::optional<double> true_value;
};

// Long-format coefficient records; the intercept row reports offset + beta0.
std::vector<CoefficientRow> coefficient_table(const FittedModel& model,
                                              const SimTruth* truth = nullptr);

// Scoring kernel: mean squared difference between the survival indicator
// 1{y > t} and a survival probability.
double brier_score_values(std::span<const double> y, std::span<const double> survival, double t);

// Brier score of a Weibull fit on a validation set, S(t|x) = exp(-(t/lambda)^k).
double brier_score(const FittedModel& model, const Dataset& validation, double t);

// Trapezoidal integral of BS(t) over the grid, normalized by the grid span.
double integrated_brier(const FittedModel& model, const Dataset& validation,
                        std::span<const double> grid);

std::vector<double> default_time_grid(const Dataset& validation, int points = 100);

}  // namespace gamboost
