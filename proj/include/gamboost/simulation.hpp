#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gamboost/dataset.hpp"
#include "gamboost/metrics.hpp"

namespace gamboost {

struct SimulatedData {
  Dataset data;
  SimTruth truth;
};

// Response samplers used by the settings below (natural-scale parameters).
double sample_gaussian_response(double mu, double sigma, std::mt19937_64& rng);
// gamma-Poisson mixture, exact for the NB2 parametrization
double sample_negbin_response(double mu, double alpha, std::mt19937_64& rng);
// inverse-CDF draw lambda * (-ln U)^(1/k)
double sample_weibull_response(double lambda, double k, std::mt19937_64& rng);

// The three synthetic settings; `extra_noise` appends U[-1,1] columns with
// zero true effect. `fixed_alpha` pins the negative binomial overdispersion
// to a constant instead of the covariate-driven value.
SimulatedData simulate_gaussian(int n, int extra_noise, std::uint64_t seed);
SimulatedData simulate_negbin(int n, int extra_noise, std::uint64_t seed,
                              std::optional<double> fixed_alpha = std::nullopt);
SimulatedData simulate_weibull(int n, int extra_noise, std::uint64_t seed);

SimulatedData simulate(Family setting, int n, int extra_noise, std::uint64_t seed);

struct StudyConfig {
  Family setting = Family::GaussianLS;
  std::vector<std::string> schemes;
  int replicates = 1;
  int n = 500;
  std::vector<int> noise_levels{0};
  int cv_folds = 10;
  std::uint64_t seed = 1;
  double lambda_s = 0.1;
  int jobs = 1;
  int max_mstop_override = 0;  // 0 = per-scheme default
  bool record_timing = true;
};

struct StudyRecord {
  std::string scheme;
  int noise = 0;
  int replicate = 0;  // 1-based
  FittedModel model;
  SimTruth truth;
  SelectionMetrics metrics;
  int m_stop = 0;
  double seconds = 0.0;
};

struct StudyResult {
  std::vector<StudyRecord> records;
};

// Full scheme-comparison study: per (scheme, noise level, replicate)
// simulate, tune m_stop by cross-validation, refit, and score. Replicate
// data depend only on (noise, replicate), so schemes are compared on
// identical draws.
StudyResult run_study(const StudyConfig& cfg);

}  // namespace gamboost
