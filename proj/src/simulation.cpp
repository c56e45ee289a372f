#include "gamboost/simulation.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "gamboost/numeric.hpp"
#include "gamboost/parallel.hpp"
#include "gamboost/tuning.hpp"

namespace gamboost {

double sample_gaussian_response(double mu, double sigma, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(mu, sigma);
  return dist(rng);
}

double sample_negbin_response(double mu, double alpha, std::mt19937_64& rng) {
  std::gamma_distribution<double> gamma(1.0 / alpha, alpha);
  const double g = gamma(rng);
  std::poisson_distribution<long> pois(mu * g);
  return static_cast<double>(pois(rng));
}

double sample_weibull_response(double lambda, double k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u = unif(rng);
  while (u <= 0.0) u = unif(rng);
  return lambda * std::pow(-std::log(u), 1.0 / k);
}

namespace {

constexpr int kInformative = 6;

// x1..x6 plus noise columns; `bernoulli_from` marks the first Bernoulli(0.5)
// column among the informative six (-1 = all uniform)
Dataset draw_covariates(int n, int extra_noise, std::mt19937_64& rng, int bernoulli_from) {
  Dataset d;
  const int p = kInformative + extra_noise;
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::bernoulli_distribution bern(0.5);
  d.columns.resize(static_cast<std::size_t>(p));
  d.names.resize(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) {
    auto& col = d.columns[static_cast<std::size_t>(j)];
    col.resize(static_cast<std::size_t>(n));
    const bool is_bern = bernoulli_from >= 0 && j >= bernoulli_from && j < kInformative;
    for (int i = 0; i < n; ++i)
      col[static_cast<std::size_t>(i)] = is_bern ? (bern(rng) ? 1.0 : 0.0) : unif(rng);
    d.names[static_cast<std::size_t>(j)] = "x" + std::to_string(j + 1);
  }
  return d;
}

SimTruth make_truth(int p, std::array<double, kNumParams> intercepts,
                    const std::array<std::vector<double>, kNumParams>& informative_slopes) {
  SimTruth t;
  t.intercepts = intercepts;
  for (int k = 0; k < kNumParams; ++k) {
    auto& s = t.slopes[static_cast<std::size_t>(k)];
    s.assign(static_cast<std::size_t>(p), 0.0);
    const auto& src = informative_slopes[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < src.size(); ++j) s[j] = src[j];
  }
  return t;
}

double linear_predictor(const Dataset& d, const SimTruth& t, int k, int i) {
  double eta = t.intercepts[static_cast<std::size_t>(k)];
  const auto& slopes = t.slopes[static_cast<std::size_t>(k)];
  for (std::size_t j = 0; j < slopes.size(); ++j)
    if (slopes[j] != 0.0) eta += slopes[j] * d.columns[j][static_cast<std::size_t>(i)];
  return eta;
}

}  // namespace

SimulatedData simulate_gaussian(int n, int extra_noise, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
  std::mt19937_64 rng(seed);
  SimulatedData out;
  out.data = draw_covariates(n, extra_noise, rng, -1);
  out.truth = make_truth(out.data.p(), {0.0, 2.0},
                         {{{1.0, 2.0, 0.5, -1.0, 0.0, 0.0}, {0.0, 0.0, 0.2, 0.1, -0.1, -0.2}}});
  out.data.y.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double mu = linear_predictor(out.data, out.truth, 0, i);
    const double sigma = std::exp(linear_predictor(out.data, out.truth, 1, i));
    out.data.y[static_cast<std::size_t>(i)] = sample_gaussian_response(mu, sigma, rng);
  }
  return out;
}

SimulatedData simulate_negbin(int n, int extra_noise, std::uint64_t seed,
                              std::optional<double> fixed_alpha) {
  if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
  std::mt19937_64 rng(seed);
  SimulatedData out;
  out.data = draw_covariates(n, extra_noise, rng, 3);  // x4..x6 Bernoulli(0.5)
  out.truth = make_truth(out.data.p(), {-0.5, 0.0},
                         {{{-0.5, 0.3, 0.0, 0.5, -0.3, 0.0}, {0.0, 0.6, -0.6, 0.0, -0.4, 0.4}}});
  out.data.y.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double mu = std::exp(linear_predictor(out.data, out.truth, 0, i));
    const double alpha =
        fixed_alpha ? *fixed_alpha : std::exp(linear_predictor(out.data, out.truth, 1, i));
    out.data.y[static_cast<std::size_t>(i)] = sample_negbin_response(mu, alpha, rng);
  }
  return out;
}

SimulatedData simulate_weibull(int n, int extra_noise, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
  std::mt19937_64 rng(seed);
  SimulatedData out;
  out.data = draw_covariates(n, extra_noise, rng, -1);
  out.truth = make_truth(out.data.p(), {0.6, 0.0},
                         {{{0.15, -0.2, 0.4, -0.25, 0.0, 0.0}, {0.0, 0.0, -0.15, 0.15, -0.1, 0.1}}});
  out.data.y.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double lambda = std::exp(linear_predictor(out.data, out.truth, 0, i));
    const double k = std::exp(linear_predictor(out.data, out.truth, 1, i));
    out.data.y[static_cast<std::size_t>(i)] = sample_weibull_response(lambda, k, rng);
  }
  return out;
}

SimulatedData simulate(Family setting, int n, int extra_noise, std::uint64_t seed) {
  switch (setting) {
    case Family::GaussianLS: return simulate_gaussian(n, extra_noise, seed);
    case Family::NegBinLS: return simulate_negbin(n, extra_noise, seed);
    case Family::WeibullSS: return simulate_weibull(n, extra_noise, seed);
  }
  throw std::invalid_argument("simulate: unknown setting");
}

StudyResult run_study(const StudyConfig& cfg) {
  if (cfg.replicates < 1) throw std::invalid_argument("run_study: need at least one replicate");
  if (cfg.schemes.empty()) throw std::invalid_argument("run_study: no schemes given");

  struct Cell {
    int scheme_idx;
    int noise_idx;
    int replicate;
  };
  std::vector<Cell> cells;
  for (int s = 0; s < static_cast<int>(cfg.schemes.size()); ++s)
    for (int v = 0; v < static_cast<int>(cfg.noise_levels.size()); ++v)
      for (int b = 0; b < cfg.replicates; ++b) cells.push_back({s, v, b});

  StudyResult result;
  result.records.resize(cells.size());

  parallel_for(static_cast<int>(cells.size()), cfg.jobs, [&](int c) {
    const Cell& cell = cells[static_cast<std::size_t>(c)];
    const std::string& scheme_name = cfg.schemes[static_cast<std::size_t>(cell.scheme_idx)];
    const int noise = cfg.noise_levels[static_cast<std::size_t>(cell.noise_idx)];
    // replicate data depend on (noise, replicate) only
    const std::uint64_t data_seed =
        mix_seed(cfg.seed, static_cast<std::uint64_t>(cell.noise_idx) * 1000003ULL +
                               static_cast<std::uint64_t>(cell.replicate));
    try {
      const SimulatedData sim = simulate(cfg.setting, cfg.n, noise, data_seed);

      FitConfig fit_cfg;
      fit_cfg.family = cfg.setting;
      fit_cfg.scheme = SchemeSpec::preset(scheme_name, cfg.setting, cfg.lambda_s);
      fit_cfg.rng_seed = data_seed;

      const int max_m =
          cfg.max_mstop_override > 0 ? cfg.max_mstop_override : default_max_mstop(fit_cfg.scheme);
      const auto cv = kfold_cv(sim.data, fit_cfg, cfg.cv_folds, max_m, mix_seed(data_seed, 7), 1);

      fit_cfg.m_stop = cv.m_stop;
      const auto t0 = std::chrono::steady_clock::now();
      const FitResult fit = boost_fit(sim.data, fit_cfg);
      const auto t1 = std::chrono::steady_clock::now();

      StudyRecord rec;
      rec.scheme = scheme_name;
      rec.noise = noise;
      rec.replicate = cell.replicate + 1;
      rec.model = fit.model;
      rec.truth = sim.truth;
      rec.metrics = selection_metrics(fit.model, sim.truth);
      rec.m_stop = cv.m_stop;
      rec.seconds =
          cfg.record_timing ? std::chrono::duration<double>(t1 - t0).count() : 0.0;
      result.records[static_cast<std::size_t>(c)] = std::move(rec);
    } catch (const std::exception& e) {
      throw std::runtime_error("study cell (scheme " + scheme_name + ", noise " +
                               std::to_string(noise) + ", replicate " +
                               std::to_string(cell.replicate + 1) + "): " + e.what());
    }
  });
  return result;
}

}  // namespace gamboost
