#include "gamboost/boost.hpp"

#include <cmath>
#include <stdexcept>

namespace gamboost {

void FitConfig::validate() const {
  if (m_stop < 1) throw std::invalid_argument("fit config: m_stop must be >= 1");
  scheme.validate(family);
}

FitResult boost_fit(const Dataset& d, const FitConfig& cfg, const FitHooks* hooks) {
  cfg.validate();
  d.validate_for(cfg.family);
  const FamilyModel fam = FamilyModel::make(cfg.family);

  FitResult res;
  res.model.family = cfg.family;
  res.model.names = d.names;
  res.model.offsets = fam.init_offsets(d.y);
  res.model.coef.init(d.p());
  res.model.m_stop = 0;

  EtaVectors& etas = res.final_etas;
  for (int k = 0; k < kNumParams; ++k)
    etas[static_cast<std::size_t>(k)]
        .assign(static_cast<std::size_t>(d.n()), res.model.offsets[static_cast<std::size_t>(k)]);

  if (hooks && hooks->on_init) hooks->on_init(res.model.offsets);

  double current_loss = fam.neg_log_lik(etas, d.y);
  res.trace.initial_loss = current_loss;
  if (d.p() == 0) return res;  // intercept-only model: the offsets are the fit

  StepLengthCache cache(d.p());
  std::array<FittedBaseLearner, kNumParams> best;

  for (int m = 1; m <= cfg.m_stop; ++m) {
    try {
      // steps 1-3: gradients, base-learner fits, per-parameter selection
      for (int k = 0; k < kNumParams; ++k) {
        const auto u = fam.negative_gradient(k, etas, d.y);
        best[static_cast<std::size_t>(k)] = select_best(u, d.columns);
      }

      // step 4: all step lengths at once (ratio rules need both norms)
      const auto steps = compute_step_lengths(fam, cfg.scheme, best, etas, d.y, cache);

      if (hooks && hooks->on_step) {
        for (int k = 0; k < kNumParams; ++k) {
          StepContext ctx{m, k, etas, best[static_cast<std::size_t>(k)],
                          cfg.scheme.rules[static_cast<std::size_t>(k)],
                          steps[static_cast<std::size_t>(k)].nu_unshrunk};
          hooks->on_step(ctx);
        }
      }

      // step 5: candidate losses
      std::array<double, kNumParams> rho;
      for (int k = 0; k < kNumParams; ++k) {
        const auto& s = steps[static_cast<std::size_t>(k)];
        const auto& bl = best[static_cast<std::size_t>(k)];
        rho[static_cast<std::size_t>(k)] =
            bl.sqnorm > 0.0 && s.nu != 0.0
                ? fam.neg_log_lik_shifted_safe(etas, k, s.nu, bl.fitted, d.y)
                : current_loss;
      }

      // step 6: winning parameter, ties to the lower index
      int k_star = 0;
      for (int k = 1; k < kNumParams; ++k)
        if (rho[static_cast<std::size_t>(k)] < rho[static_cast<std::size_t>(k_star)]) k_star = k;
      if (!std::isfinite(rho[static_cast<std::size_t>(k_star)]))
        throw std::runtime_error("no candidate update has a finite loss");

      // step 7: apply the single winning update
      const auto& win = best[static_cast<std::size_t>(k_star)];
      const double nu = steps[static_cast<std::size_t>(k_star)].nu;
      auto& eta = etas[static_cast<std::size_t>(k_star)];
      for (std::size_t i = 0; i < eta.size(); ++i) eta[i] += nu * win.fitted[i];
      res.model.coef.beta0[static_cast<std::size_t>(k_star)] += nu * win.intercept;
      res.model.coef.beta[static_cast<std::size_t>(k_star)]
                         [static_cast<std::size_t>(win.covariate)] += nu * win.slope;
      current_loss = rho[static_cast<std::size_t>(k_star)];

      for (int k = 0; k < kNumParams; ++k) {
        const auto& s = steps[static_cast<std::size_t>(k)];
        const auto& bl = best[static_cast<std::size_t>(k)];
        TraceRow row;
        row.iteration = m;
        row.param = k;
        row.covariate = bl.covariate;
        row.nu = s.nu;
        row.intercept = bl.intercept;
        row.slope = bl.slope;
        row.sqnorm = bl.sqnorm;
        row.zeta = s.nu * bl.sqnorm;
        row.loss = rho[static_cast<std::size_t>(k)];
        row.applied = k == k_star;
        row.boundary = s.boundary;
        row.fallback = s.fallback;
        res.trace.rows.push_back(row);
      }
      res.model.m_stop = m;

      if (hooks && hooks->on_update) {
        AppliedUpdate up{m,  k_star,        win.covariate, nu,
                         win.intercept, win.slope, current_loss};
        hooks->on_update(up);
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("boosting iteration " + std::to_string(m) + ": " + e.what());
    }
  }
  return res;
}

}  // namespace gamboost
