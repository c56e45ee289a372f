#pragma once

#include <array>
#include <string>
#include <vector>

#include "gamboost/dataset.hpp"
#include "gamboost/family.hpp"

namespace gamboost {

// Accumulated coefficients on the link scale, excluding the offsets.
struct CoefficientState {
  std::array<double, kNumParams> beta0{};
  std::array<std::vector<double>, kNumParams> beta;

  void init(int p) {
    for (auto& b : beta) b.assign(static_cast<std::size_t>(p), 0.0);
    beta0 = {};
  }
};

// One candidate record per (iteration, parameter).
struct TraceRow {
  int iteration = 0;  // 1-based
  int param = 0;
  int covariate = -1;
  double nu = 0.0;
  double intercept = 0.0;  // fitted base-learner coefficients
  double slope = 0.0;
  double sqnorm = 0.0;
  double zeta = 0.0;  // nu * sqnorm
  double loss = 0.0;  // candidate loss rho_k
  bool applied = false;
  bool boundary = false;
  bool fallback = false;
};

struct FitTrace {
  double initial_loss = 0.0;
  std::vector<TraceRow> rows;
};

struct FittedModel {
  Family family = Family::GaussianLS;
  std::array<double, kNumParams> offsets{};
  CoefficientState coef;
  std::vector<std::string> names;
  int m_stop = 0;
};

// Link-scale predictors offset + beta0 + X*beta for new covariate columns.
EtaVectors predict_link(const FittedModel& model,
                        const std::vector<std::vector<double>>& columns, int n_rows);
EtaVectors predict_link(const FittedModel& model, const Dataset& d);

// Natural-scale parameter values (inverse link applied).
EtaVectors predict(const FittedModel& model, const std::vector<std::vector<double>>& columns,
                   int n_rows);
EtaVectors predict(const FittedModel& model, const Dataset& d);

}  // namespace gamboost
