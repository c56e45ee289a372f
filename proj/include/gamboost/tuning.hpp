#pragma once

#include <cstdint>
#include <vector>

#include "gamboost/boost.hpp"

namespace gamboost {

struct CvResult {
  std::vector<double> risk_curve;  // mean held-out risk after iteration m (1-based index m-1)
  int m_stop = 1;                  // first minimizer of the curve
};

// k-fold cross-validated risk curve: held-out mean negative log-likelihood
// per boosting iteration, averaged over folds. Fold offsets come from each
// fold's own training part.
CvResult kfold_cv(const Dataset& d, const FitConfig& cfg, int folds, int max_m,
                  std::uint64_t seed, int jobs = 1);

struct RepeatedCvResult {
  int m_stop_median = 1;  // median across repeats, rounded half up
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  std::vector<int> per_repeat;
};

RepeatedCvResult repeated_cv(const Dataset& d, const FitConfig& cfg, int folds, int max_m,
                             int n_repeats, std::uint64_t seed, int jobs = 1);

// Near-equal seeded partition into `folds` groups of row indices.
std::vector<std::vector<int>> fold_partition(int n, int folds, std::uint64_t seed);

// 2,000 for schemes whose optimal/reference rules are all fixed,
// 500 for schemes with a line-search or analytic rule.
int default_max_mstop(const SchemeSpec& scheme);

}  // namespace gamboost
