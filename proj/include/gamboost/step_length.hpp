#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamboost/base_learner.hpp"
#include "gamboost/family.hpp"

namespace gamboost {

enum class StepRuleKind { Fixed, LineSearch, Analytic, BLRatio };

struct StepRule {
  StepRuleKind kind = StepRuleKind::Fixed;
  double fixed_value = 0.1;  // Fixed
  double lo = 0.0;           // LineSearch interval; also the Analytic clamp/seed interval
  double hi = 10.0;
  double tol = 1e-4;
  int reference = -1;  // BLRatio: index of the reference parameter
};

// Per-parameter step-length rules plus the shared shrinkage factor.
struct SchemeSpec {
  std::array<StepRule, kNumParams> rules;
  double lambda_s = 0.1;
  std::string label;

  // Presets as spelled in the study outputs: F-F, LS-LS, A-LS, A-BL,
  // BL-F (Gaussian), F-BL (negative binomial / Weibull).
  static SchemeSpec preset(const std::string& name, Family family, double lambda_s = 0.1);
  static const std::vector<std::string>& preset_names();
  static std::vector<std::string> presets_for(Family family);

  void validate(Family family) const;
};

// Last unshrunk optimal step lengths, per (parameter, covariate) and per
// parameter. Confined to a single fitting run.
class StepLengthCache {
 public:
  explicit StepLengthCache(int n_covariates);

  std::optional<double> lookup(int param, int covariate) const;
  bool has_param(int param) const;
  void store(int param, int covariate, double nu_unshrunk);

 private:
  std::array<std::vector<double>, kNumParams> by_covariate_;  // NaN = unset
  std::array<double, kNumParams> by_param_;
};

struct LineSearchResult {
  double nu = 0.0;
  bool boundary = false;  // minimizer within tol of hi
};

// Golden-section minimizer of nu -> loss(eta_k + nu*h) on [lo, hi].
// Non-finite probe values compare as +infinity; the loss must be finite at
// lo and at the returned minimizer.
LineSearchResult line_search(const FamilyModel& f, const EtaVectors& etas, int k,
                             std::span<const double> h, std::span<const double> y, double lo,
                             double hi, double tol);

// Exact weighted-least-squares minimizer for the Gaussian identity-link
// location step.
double gaussian_location_step(const EtaVectors& etas, std::span<const double> h,
                              std::span<const double> y);

// Raw closed-form Taylor approximations of the optimal step length,
// centered at nu_prev.
double negbin_location_step_formula(const EtaVectors& etas, std::span<const double> h,
                                    std::span<const double> y, double nu_prev);
double weibull_scale_step_formula(const EtaVectors& etas, std::span<const double> h,
                                  std::span<const double> y, double nu_prev);

struct AnalyticStepResult {
  double nu = 0.0;         // unshrunk
  bool boundary = false;   // line-search seeding hit the interval edge
  bool fallback = false;   // formula was non-positive/non-finite, fell back to line search
};

// Cached approximate optimal step for the reference parameter of the
// negative binomial (mu) and Weibull (lambda) models. The cache chain is
// (param, covariate) -> param-level -> line-search seeding; results are
// clamped to (0, hi] and stored unshrunk under both keys.
AnalyticStepResult analytic_step(const FamilyModel& f, const EtaVectors& etas, int k,
                                 const FittedBaseLearner& learner, std::span<const double> y,
                                 StepLengthCache& cache, const StepRule& rule);

// nu_other = nu_ref * sqnorm_ref / sqnorm_other, which equalizes the update
// sizes zeta of the two candidates.
double norm_ratio_step(double nu_ref, double sqnorm_ref, double sqnorm_other);

struct StepDecision {
  double nu = 0.0;           // final step length (shrunk where applicable)
  double nu_unshrunk = 0.0;  // optimal step before shrinkage (Fixed: the fixed value)
  bool boundary = false;
  bool fallback = false;
};

// Step 4 of the boosting iteration for all parameters at once; BLRatio
// rules are resolved after their reference so shrinkage propagates through
// the ratio.
std::array<StepDecision, kNumParams> compute_step_lengths(
    const FamilyModel& f, const SchemeSpec& scheme,
    const std::array<FittedBaseLearner, kNumParams>& best, const EtaVectors& etas,
    std::span<const double> y, StepLengthCache& cache);

}  // namespace gamboost
