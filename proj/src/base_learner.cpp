#include "gamboost/base_learner.hpp"

#include <stdexcept>

#include "gamboost/numeric.hpp"

namespace gamboost {

namespace {

struct OlsFit {
  double intercept = 0.0;
  double slope = 0.0;
  double ssr = 0.0;
};

// centered two-pass OLS; ssr accumulated directly so select_best and
// fit_linear agree bit for bit
OlsFit ols(std::span<const double> u, std::span<const double> x, double mean_u) {
  const std::size_t n = u.size();
  const double mean_x = mean(x);
  double sxx = 0.0, sxu = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    sxx += dx * dx;
    sxu += dx * (u[i] - mean_u);
  }
  OlsFit f;
  f.slope = sxx > 0.0 ? sxu / sxx : 0.0;
  f.intercept = mean_u - f.slope * mean_x;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = u[i] - (f.intercept + f.slope * x[i]);
    f.ssr += r * r;
  }
  return f;
}

}  // namespace

FittedBaseLearner fit_linear(std::span<const double> u, std::span<const double> x) {
  if (u.size() != x.size() || u.size() < 2)
    throw std::invalid_argument("fit_linear: need matching vectors of length >= 2");
  const OlsFit f = ols(u, x, mean(u));
  FittedBaseLearner b;
  b.intercept = f.intercept;
  b.slope = f.slope;
  b.ssr = f.ssr;
  b.fitted.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    b.fitted[i] = f.intercept + f.slope * x[i];
    b.sqnorm += b.fitted[i] * b.fitted[i];
  }
  return b;
}

FittedBaseLearner select_best(std::span<const double> u,
                              const std::vector<std::vector<double>>& columns) {
  if (columns.empty()) throw std::invalid_argument("select_best: no covariates");
  const double mean_u = mean(u);
  int best_j = 0;
  OlsFit best = ols(u, columns[0], mean_u);
  for (std::size_t j = 1; j < columns.size(); ++j) {
    const OlsFit f = ols(u, columns[j], mean_u);
    if (f.ssr < best.ssr) {
      best = f;
      best_j = static_cast<int>(j);
    }
  }
  FittedBaseLearner b = fit_linear(u, columns[static_cast<std::size_t>(best_j)]);
  b.covariate = best_j;
  return b;
}

}  // namespace gamboost
