#pragma once

#include <cstdint>
#include <functional>

#include "gamboost/dataset.hpp"
#include "gamboost/model.hpp"
#include "gamboost/step_length.hpp"

namespace gamboost {

struct FitConfig {
  Family family = Family::GaussianLS;
  SchemeSpec scheme;
  int m_stop = 100;
  std::uint64_t rng_seed = 1;

  void validate() const;
};

struct AppliedUpdate {
  int iteration = 0;  // 1-based
  int param = 0;
  int covariate = -1;
  double nu = 0.0;
  double intercept = 0.0;
  double slope = 0.0;
  double loss_after = 0.0;
};

// Candidate state handed to the step instrument, before the update decision.
struct StepContext {
  int iteration = 0;
  int param = 0;
  const EtaVectors& etas;
  const FittedBaseLearner& learner;
  StepRule rule;
  double nu_unshrunk = 0.0;
};

struct FitHooks {
  std::function<void(const std::array<double, kNumParams>&)> on_init;
  std::function<void(const AppliedUpdate&)> on_update;
  std::function<void(const StepContext&)> on_step;
};

struct FitResult {
  FittedModel model;
  FitTrace trace;
  EtaVectors final_etas;
};

// The non-cyclical boosting loop: per iteration, fit and select one
// base-learner per distribution parameter, compute all step lengths, and
// apply only the candidate with the lowest loss.
FitResult boost_fit(const Dataset& d, const FitConfig& cfg, const FitHooks* hooks = nullptr);

}  // namespace gamboost
