#include "gamboost/step_length.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gamboost {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

StepRule fixed_rule(double value) {
  StepRule r;
  r.kind = StepRuleKind::Fixed;
  r.fixed_value = value;
  return r;
}

StepRule line_search_rule(double lo, double hi) {
  StepRule r;
  r.kind = StepRuleKind::LineSearch;
  r.lo = lo;
  r.hi = hi;
  return r;
}

StepRule analytic_rule(double lo, double hi) {
  StepRule r;
  r.kind = StepRuleKind::Analytic;
  r.lo = lo;
  r.hi = hi;
  return r;
}

StepRule ratio_rule(int reference) {
  StepRule r;
  r.kind = StepRuleKind::BLRatio;
  r.reference = reference;
  return r;
}

// default line-search intervals per family and parameter
std::array<std::array<double, 2>, kNumParams> search_intervals(Family f) {
  switch (f) {
    case Family::GaussianLS: return {{{0.0, 10.0}, {0.0, 10.0}}};
    case Family::NegBinLS: return {{{0.0, 20.0}, {0.0, 200.0}}};
    case Family::WeibullSS: return {{{0.0, 20.0}, {0.0, 20.0}}};
  }
  return {{{0.0, 10.0}, {0.0, 10.0}}};
}

}  // namespace

namespace {

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

SchemeSpec SchemeSpec::preset(const std::string& name, Family family, double lambda_s) {
  const auto iv = search_intervals(family);
  SchemeSpec s;
  s.label = name;
  s.lambda_s = lambda_s;
  if (name == "F-F") {
    s.rules = {fixed_rule(0.1), fixed_rule(0.1)};
  } else if (name == "LS-LS") {
    s.rules = {line_search_rule(iv[0][0], iv[0][1]), line_search_rule(iv[1][0], iv[1][1])};
  } else if (name == "A-LS") {
    s.rules = {analytic_rule(iv[0][0], iv[0][1]), line_search_rule(iv[1][0], iv[1][1])};
  } else if (name == "A-BL") {
    s.rules = {analytic_rule(iv[0][0], iv[0][1]), ratio_rule(0)};
  } else if (name == "BL-F" && family == Family::GaussianLS) {
    s.rules = {ratio_rule(1), fixed_rule(0.1)};
  } else if (name == "F-BL" && family != Family::GaussianLS) {
    s.rules = {fixed_rule(0.1), ratio_rule(0)};
  } else {
    throw std::invalid_argument("scheme '" + name + "' is not valid for family '" +
                                family_to_string(family) + "' (valid presets: " +
                                join_names(presets_for(family)) + ")");
  }
  s.validate(family);
  return s;
}

const std::vector<std::string>& SchemeSpec::preset_names() {
  static const std::vector<std::string> names{"F-F", "LS-LS", "A-LS", "A-BL", "BL-F", "F-BL"};
  return names;
}

std::vector<std::string> SchemeSpec::presets_for(Family family) {
  if (family == Family::GaussianLS) return {"F-F", "LS-LS", "A-LS", "A-BL", "BL-F"};
  return {"F-F", "LS-LS", "A-LS", "A-BL", "F-BL"};
}

void SchemeSpec::validate(Family family) const {
  if (!(lambda_s > 0.0 && lambda_s <= 1.0))
    throw std::invalid_argument("scheme: lambda_s must lie in (0,1]");
  int n_ratio = 0;
  for (int k = 0; k < kNumParams; ++k) {
    const StepRule& r = rules[static_cast<std::size_t>(k)];
    switch (r.kind) {
      case StepRuleKind::Fixed:
        if (!(r.fixed_value >= 0.0)) throw std::invalid_argument("scheme: fixed step must be >= 0");
        break;
      case StepRuleKind::LineSearch:
        if (!(r.lo < r.hi)) throw std::invalid_argument("scheme: line-search interval is empty");
        break;
      case StepRuleKind::Analytic:
        if (k != 0)
          throw std::invalid_argument(
              "scheme: the analytic step is only available for the first distribution parameter");
        break;
      case StepRuleKind::BLRatio: {
        ++n_ratio;
        if (r.reference < 0 || r.reference >= kNumParams || r.reference == k)
          throw std::invalid_argument("scheme: invalid base-learner-ratio reference");
        if (rules[static_cast<std::size_t>(r.reference)].kind == StepRuleKind::BLRatio)
          throw std::invalid_argument("scheme: ratio reference must not itself be a ratio rule");
        break;
      }
    }
  }
  if (n_ratio > 1) throw std::invalid_argument("scheme: at most one ratio rule is allowed");
  (void)family;
}

StepLengthCache::StepLengthCache(int n_covariates) {
  for (int k = 0; k < kNumParams; ++k) {
    by_covariate_[static_cast<std::size_t>(k)].assign(
        static_cast<std::size_t>(std::max(n_covariates, 0)), kNan);
    by_param_[static_cast<std::size_t>(k)] = kNan;
  }
}

std::optional<double> StepLengthCache::lookup(int param, int covariate) const {
  const auto& col = by_covariate_[static_cast<std::size_t>(param)];
  if (covariate >= 0 && static_cast<std::size_t>(covariate) < col.size() &&
      !std::isnan(col[static_cast<std::size_t>(covariate)]))
    return col[static_cast<std::size_t>(covariate)];
  const double p = by_param_[static_cast<std::size_t>(param)];
  if (!std::isnan(p)) return p;
  return std::nullopt;
}

bool StepLengthCache::has_param(int param) const {
  return !std::isnan(by_param_[static_cast<std::size_t>(param)]);
}

void StepLengthCache::store(int param, int covariate, double nu_unshrunk) {
  if (!(std::isfinite(nu_unshrunk) && nu_unshrunk > 0.0))
    throw std::invalid_argument("step cache: entries must be finite and positive");
  auto& col = by_covariate_[static_cast<std::size_t>(param)];
  if (covariate >= 0 && static_cast<std::size_t>(covariate) < col.size())
    col[static_cast<std::size_t>(covariate)] = nu_unshrunk;
  by_param_[static_cast<std::size_t>(param)] = nu_unshrunk;
}

LineSearchResult line_search(const FamilyModel& f, const EtaVectors& etas, int k,
                             std::span<const double> h, std::span<const double> y, double lo,
                             double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("line_search: lo must be below hi");

  const auto loss = [&](double nu) { return f.neg_log_lik_shifted_safe(etas, k, nu, h, y); };
  if (!std::isfinite(loss(lo)))
    throw std::runtime_error("line_search: loss is not finite at the interval start");

  constexpr double kInvPhi = 0.6180339887498949;  // 1/phi
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = loss(c);
  double fd = loss(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = loss(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = loss(d);
    }
  }
  LineSearchResult res;
  res.nu = 0.5 * (a + b);
  res.boundary = res.nu >= hi - tol;
  if (!std::isfinite(loss(res.nu)))
    throw std::runtime_error("line_search: loss is not finite at the minimizer");
  return res;
}

double gaussian_location_step(const EtaVectors& etas, std::span<const double> h,
                              std::span<const double> y) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double inv_var = std::exp(-2.0 * etas[1][i]);
    num += h[i] * (y[i] - etas[0][i]) * inv_var;
    den += h[i] * h[i] * inv_var;
  }
  if (!(den > 0.0)) throw std::runtime_error("gaussian_location_step: zero denominator");
  return num / den;
}

double negbin_location_step_formula(const EtaVectors& etas, std::span<const double> h,
                                    std::span<const double> y, double nu_prev) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double hi = h[i];
    const double mu_prev = std::exp(etas[0][i] + nu_prev * hi);
    const double alpha = std::exp(etas[1][i]);
    const double denom = 1.0 + alpha * mu_prev;
    num += hi * (y[i] - mu_prev * (1.0 - hi * nu_prev)) / denom;
    den += hi * hi * mu_prev / denom;
  }
  if (!(den != 0.0)) throw std::runtime_error("negbin_location_step: degenerate base-learner");
  return num / den;
}

double weibull_scale_step_formula(const EtaVectors& etas, std::span<const double> h,
                                  std::span<const double> y, double nu_prev) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double hi = h[i];
    const double k = std::exp(etas[1][i]);
    // y^k * exp(eta + nu_prev*h)^(-k)
    const double wk = std::exp(k * (std::log(y[i]) - etas[0][i] - nu_prev * hi));
    num += hi * k - hi * k * wk * (1.0 + k * hi * nu_prev);
    den += hi * hi * k * k * wk;
  }
  if (!(den != 0.0)) throw std::runtime_error("weibull_scale_step: degenerate base-learner");
  return -num / den;
}

AnalyticStepResult analytic_step(const FamilyModel& f, const EtaVectors& etas, int k,
                                 const FittedBaseLearner& learner, std::span<const double> y,
                                 StepLengthCache& cache, const StepRule& rule) {
  AnalyticStepResult res;
  if (f.id() == Family::GaussianLS) {
    res.nu = gaussian_location_step(etas, learner.fitted, y);  // exact, no cache needed
    return res;
  }

  const auto prev = cache.lookup(k, learner.covariate);
  if (!prev.has_value()) {
    // first iteration: seed with a line search on the rule's interval
    const auto ls = line_search(f, etas, k, learner.fitted, y, rule.lo, rule.hi, rule.tol);
    res.nu = ls.nu;
    res.boundary = ls.boundary;
    if (res.nu > 0.0) cache.store(k, learner.covariate, res.nu);
    return res;
  }

  double value = f.id() == Family::NegBinLS
                     ? negbin_location_step_formula(etas, learner.fitted, y, *prev)
                     : weibull_scale_step_formula(etas, learner.fitted, y, *prev);
  if (!std::isfinite(value) || value <= 0.0) {
    const auto ls = line_search(f, etas, k, learner.fitted, y, rule.lo, rule.hi, rule.tol);
    res.nu = ls.nu;
    res.boundary = ls.boundary;
    res.fallback = true;
  } else {
    res.nu = std::min(value, rule.hi);
  }
  if (res.nu > 0.0) cache.store(k, learner.covariate, res.nu);
  return res;
}

double norm_ratio_step(double nu_ref, double sqnorm_ref, double sqnorm_other) {
  if (!(sqnorm_other > 0.0)) throw std::runtime_error("norm_ratio_step: degenerate base-learner");
  return nu_ref * sqnorm_ref / sqnorm_other;
}

std::array<StepDecision, kNumParams> compute_step_lengths(
    const FamilyModel& f, const SchemeSpec& scheme,
    const std::array<FittedBaseLearner, kNumParams>& best, const EtaVectors& etas,
    std::span<const double> y, StepLengthCache& cache) {
  std::array<StepDecision, kNumParams> out;

  // non-ratio rules first; ratio rules resolve against the final reference step
  for (int pass = 0; pass < 2; ++pass) {
    for (int k = 0; k < kNumParams; ++k) {
      const StepRule& rule = scheme.rules[static_cast<std::size_t>(k)];
      const bool ratio = rule.kind == StepRuleKind::BLRatio;
      if ((pass == 0) == ratio) continue;
      StepDecision& d = out[static_cast<std::size_t>(k)];
      const FittedBaseLearner& learner = best[static_cast<std::size_t>(k)];

      // a zero-norm base-learner is a no-op candidate for any adaptive rule
      if (rule.kind != StepRuleKind::Fixed && learner.sqnorm <= 0.0) {
        d.nu = 0.0;
        d.nu_unshrunk = 0.0;
        continue;
      }
      switch (rule.kind) {
        case StepRuleKind::Fixed:
          d.nu = rule.fixed_value;  // fixed steps are final, never shrunk
          d.nu_unshrunk = rule.fixed_value;
          break;
        case StepRuleKind::LineSearch: {
          const auto ls = line_search(f, etas, k, learner.fitted, y, rule.lo, rule.hi, rule.tol);
          d.nu_unshrunk = ls.nu;
          d.boundary = ls.boundary;
          d.nu = scheme.lambda_s * ls.nu;
          break;
        }
        case StepRuleKind::Analytic: {
          const auto a = analytic_step(f, etas, k, learner, y, cache, rule);
          d.nu_unshrunk = a.nu;
          d.boundary = a.boundary;
          d.fallback = a.fallback;
          d.nu = scheme.lambda_s * a.nu;
          break;
        }
        case StepRuleKind::BLRatio: {
          const auto& ref = out[static_cast<std::size_t>(rule.reference)];
          const double sq_ref = best[static_cast<std::size_t>(rule.reference)].sqnorm;
          d.nu = norm_ratio_step(ref.nu, sq_ref, learner.sqnorm);
          d.nu_unshrunk = d.nu;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace gamboost
