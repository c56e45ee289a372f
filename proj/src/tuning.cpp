#include "gamboost/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gamboost/numeric.hpp"
#include "gamboost/parallel.hpp"

namespace gamboost {

std::vector<std::vector<int>> fold_partition(int n, int folds, std::uint64_t seed) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(folds));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i % folds)].push_back(idx[static_cast<std::size_t>(i)]);
  for (auto& fold : out) std::sort(fold.begin(), fold.end());
  return out;
}

int default_max_mstop(const SchemeSpec& scheme) {
  for (const auto& rule : scheme.rules)
    if (rule.kind == StepRuleKind::LineSearch || rule.kind == StepRuleKind::Analytic) return 500;
  return 2000;
}

CvResult kfold_cv(const Dataset& d, const FitConfig& cfg, int folds, int max_m,
                  std::uint64_t seed, int jobs) {
  if (folds < 2) throw std::invalid_argument("kfold_cv: need at least 2 folds");
  if (d.n() < folds) throw std::invalid_argument("kfold_cv: more folds than rows");
  if (max_m < 1) throw std::invalid_argument("kfold_cv: max_m must be >= 1");

  const auto assignment = fold_partition(d.n(), folds, seed);
  const FamilyModel fam = FamilyModel::make(cfg.family);

  std::vector<std::vector<double>> fold_risk(static_cast<std::size_t>(folds));
  parallel_for(folds, jobs, [&](int f) {
    const auto& val_rows = assignment[static_cast<std::size_t>(f)];
    std::vector<int> train_rows;
    train_rows.reserve(static_cast<std::size_t>(d.n()) - val_rows.size());
    for (int g = 0; g < folds; ++g) {
      if (g == f) continue;
      const auto& rows = assignment[static_cast<std::size_t>(g)];
      train_rows.insert(train_rows.end(), rows.begin(), rows.end());
    }
    std::sort(train_rows.begin(), train_rows.end());
    const Dataset train = d.subset(train_rows);
    const Dataset val = d.subset(val_rows);

    FitConfig fold_cfg = cfg;
    fold_cfg.m_stop = max_m;

    // held-out predictors maintained incrementally from the applied updates
    EtaVectors val_etas;
    auto& risks = fold_risk[static_cast<std::size_t>(f)];
    risks.assign(static_cast<std::size_t>(max_m), 0.0);
    const double n_val = static_cast<double>(val.n());

    FitHooks hooks;
    hooks.on_init = [&](const std::array<double, kNumParams>& offsets) {
      for (int k = 0; k < kNumParams; ++k)
        val_etas[static_cast<std::size_t>(k)]
            .assign(static_cast<std::size_t>(val.n()), offsets[static_cast<std::size_t>(k)]);
    };
    hooks.on_update = [&](const AppliedUpdate& up) {
      auto& eta = val_etas[static_cast<std::size_t>(up.param)];
      const auto& col = val.columns[static_cast<std::size_t>(up.covariate)];
      for (std::size_t i = 0; i < eta.size(); ++i)
        eta[i] += up.nu * (up.intercept + up.slope * col[i]);
      const double risk = fam.neg_log_lik(val_etas, val.y) / n_val;
      if (!std::isfinite(risk)) throw std::runtime_error("held-out risk is not finite");
      risks[static_cast<std::size_t>(up.iteration - 1)] = risk;
    };

    try {
      boost_fit(train, fold_cfg, &hooks);
    } catch (const std::exception& e) {
      throw std::runtime_error("fold " + std::to_string(f + 1) + ": " + e.what());
    }
  });

  CvResult res;
  res.risk_curve.assign(static_cast<std::size_t>(max_m), 0.0);
  for (const auto& risks : fold_risk)
    for (std::size_t m = 0; m < risks.size(); ++m) res.risk_curve[m] += risks[m];
  for (double& r : res.risk_curve) r /= static_cast<double>(folds);

  res.m_stop = 1;
  for (int m = 1; m < max_m; ++m)
    if (res.risk_curve[static_cast<std::size_t>(m)] <
        res.risk_curve[static_cast<std::size_t>(res.m_stop - 1)])
      res.m_stop = m + 1;
  return res;
}

RepeatedCvResult repeated_cv(const Dataset& d, const FitConfig& cfg, int folds, int max_m,
                             int n_repeats, std::uint64_t seed, int jobs) {
  if (n_repeats < 1) throw std::invalid_argument("repeated_cv: need at least one repeat");
  RepeatedCvResult res;
  res.per_repeat.assign(static_cast<std::size_t>(n_repeats), 0);
  parallel_for(n_repeats, jobs, [&](int r) {
    const auto cv = kfold_cv(d, cfg, folds, max_m, mix_seed(seed, static_cast<std::uint64_t>(r)),
                             1);
    res.per_repeat[static_cast<std::size_t>(r)] = cv.m_stop;
  });

  std::vector<double> values(res.per_repeat.begin(), res.per_repeat.end());
  const Quartiles q = quartiles(values);
  res.q1 = q.q1;
  res.median = q.median;
  res.q3 = q.q3;
  res.m_stop_median = static_cast<int>(round_half_up(q.median));
  return res;
}

}  // namespace gamboost
