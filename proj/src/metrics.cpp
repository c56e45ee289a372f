#include "gamboost/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gamboost {

std::vector<int> SimTruth::informative(int param) const {
  std::vector<int> out;
  const auto& s = slopes[static_cast<std::size_t>(param)];
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j] != 0.0) out.push_back(static_cast<int>(j));
  return out;
}

SelectionMetrics selection_metrics(const FittedModel& model, const SimTruth& truth) {
  if (truth.slopes[0].size() != model.coef.beta[0].size())
    throw std::invalid_argument("selection_metrics: truth and model disagree on p");
  SelectionMetrics m;
  for (int k = 0; k < kNumParams; ++k) {
    const auto& beta = model.coef.beta[static_cast<std::size_t>(k)];
    const auto& true_slopes = truth.slopes[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < beta.size(); ++j) {
      const bool sel = beta[j] != 0.0;
      const bool info = true_slopes[j] != 0.0;
      if (sel) ++m.selected[static_cast<std::size_t>(k)];
      if (sel && !info) ++m.false_positives[static_cast<std::size_t>(k)];
      if (!sel && info) ++m.false_negatives[static_cast<std::size_t>(k)];
    }
  }
  // Gaussian reports mu/sigma, negative binomial alpha/mu, Weibull lambda/k
  const int num = model.family == Family::NegBinLS ? 1 : 0;
  const int den = 1 - num;
  if (m.selected[static_cast<std::size_t>(den)] == 0) {
    m.scr = std::numeric_limits<double>::infinity();
  } else {
    m.scr = static_cast<double>(m.selected[static_cast<std::size_t>(num)]) /
            static_cast<double>(m.selected[static_cast<std::size_t>(den)]);
  }
  return m;
}

std::vector<CoefficientRow> coefficient_table(const FittedModel& model, const SimTruth* truth) {
  const FamilyModel fam = FamilyModel::make(model.family);
  std::vector<CoefficientRow> rows;
  for (int k = 0; k < kNumParams; ++k) {
    CoefficientRow intercept;
    intercept.parameter = fam.param_name(k);
    intercept.covariate = "(Intercept)";
    intercept.estimate = model.offsets[static_cast<std::size_t>(k)] +
                         model.coef.beta0[static_cast<std::size_t>(k)];
    if (truth) intercept.true_value = truth->intercepts[static_cast<std::size_t>(k)];
    rows.push_back(intercept);
    const auto& beta = model.coef.beta[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < beta.size(); ++j) {
      CoefficientRow r;
      r.parameter = fam.param_name(k);
      r.covariate = model.names[j];
      r.estimate = beta[j];
      if (truth) r.true_value = truth->slopes[static_cast<std::size_t>(k)][j];
      rows.push_back(r);
    }
  }
  return rows;
}

double brier_score_values(std::span<const double> y, std::span<const double> survival, double t) {
  if (y.size() != survival.size() || y.empty())
    throw std::invalid_argument("brier_score: mismatched or empty inputs");
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double ind = y[i] > t ? 1.0 : 0.0;
    s += (ind - survival[i]) * (ind - survival[i]);
  }
  return s / static_cast<double>(y.size());
}

namespace {

std::vector<double> weibull_survival(const FittedModel& model, const Dataset& validation,
                                     double t) {
  const EtaVectors params = predict(model, validation);
  std::vector<double> s(params[0].size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double lambda = params[0][i];
    const double k = params[1][i];
    s[i] = t <= 0.0 ? 1.0 : std::exp(-std::pow(t / lambda, k));
  }
  return s;
}

}  // namespace

double brier_score(const FittedModel& model, const Dataset& validation, double t) {
  if (model.family != Family::WeibullSS)
    throw std::invalid_argument("brier_score: model must be a Weibull fit");
  if (t < 0.0) throw std::invalid_argument("brier_score: time must be >= 0");
  return brier_score_values(validation.y, weibull_survival(model, validation, t), t);
}

double integrated_brier(const FittedModel& model, const Dataset& validation,
                        std::span<const double> grid) {
  if (grid.size() < 2) throw std::invalid_argument("integrated_brier: need at least 2 grid points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("integrated_brier: grid must be strictly increasing");

  double integral = 0.0;
  double prev_bs = brier_score(model, validation, grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double bs = brier_score(model, validation, grid[i]);
    integral += 0.5 * (bs + prev_bs) * (grid[i] - grid[i - 1]);
    prev_bs = bs;
  }
  return integral / (grid[grid.size() - 1] - grid[0]);
}

std::vector<double> default_time_grid(const Dataset& validation, int points) {
  if (points < 2) throw std::invalid_argument("time grid: need at least 2 points");
  double t_max = 0.0;
  for (double v : validation.y) t_max = std::max(t_max, v);
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    grid[static_cast<std::size_t>(i)] = t_max * static_cast<double>(i) /
                                        static_cast<double>(points - 1);
  return grid;
}

}  // namespace gamboost
