#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gamboost/numeric.hpp"
#include "gamboost/simulation.hpp"

using namespace gamboost;

TEST_CASE("gaussian setting encodes the published truth") {
  const auto sim = simulate_gaussian(50, 0, 1);
  CHECK(sim.data.p() == 6);
  CHECK(sim.truth.intercepts[0] == 0.0);
  CHECK(sim.truth.intercepts[1] == 2.0);
  CHECK(sim.truth.slopes[0] == std::vector<double>{1.0, 2.0, 0.5, -1.0, 0.0, 0.0});
  CHECK(sim.truth.slopes[1] == std::vector<double>{0.0, 0.0, 0.2, 0.1, -0.1, -0.2});
  CHECK(sim.truth.informative(0) == std::vector<int>{0, 1, 2, 3});
  CHECK(sim.truth.informative(1) == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("negbin setting encodes the published truth") {
  const auto sim = simulate_negbin(50, 0, 1);
  CHECK(sim.truth.intercepts[0] == -0.5);
  CHECK(sim.truth.intercepts[1] == 0.0);
  CHECK(sim.truth.slopes[0] == std::vector<double>{-0.5, 0.3, 0.0, 0.5, -0.3, 0.0});
  CHECK(sim.truth.slopes[1] == std::vector<double>{0.0, 0.6, -0.6, 0.0, -0.4, 0.4});
  // x4..x6 are Bernoulli columns
  for (int j = 3; j < 6; ++j)
    for (double v : sim.data.columns[static_cast<std::size_t>(j)])
      CHECK((v == 0.0 || v == 1.0));
  for (double v : sim.data.columns[0]) CHECK((v >= -1.0 && v <= 1.0));
}

TEST_CASE("weibull setting encodes the published truth") {
  const auto sim = simulate_weibull(50, 0, 1);
  CHECK(sim.truth.intercepts[0] == 0.6);
  CHECK(sim.truth.intercepts[1] == 0.0);
  CHECK(sim.truth.slopes[0] == std::vector<double>{0.15, -0.2, 0.4, -0.25, 0.0, 0.0});
  CHECK(sim.truth.slopes[1] == std::vector<double>{0.0, 0.0, -0.15, 0.15, -0.1, 0.1});
  for (double v : sim.data.y) CHECK(v > 0.0);
}

TEST_CASE("extra noise columns extend the covariate count") {
  const auto sim = simulate_gaussian(20, 150, 9);
  CHECK(sim.data.p() == 156);
  CHECK(sim.data.names[6] == "x7");
  for (int j = 6; j < 156; ++j) {
    CHECK(sim.truth.slopes[0][static_cast<std::size_t>(j)] == 0.0);
    CHECK(sim.truth.slopes[1][static_cast<std::size_t>(j)] == 0.0);
  }
}

TEST_CASE("samplers are deterministic and replicates differ") {
  const auto a = simulate_weibull(30, 2, 12);
  const auto b = simulate_weibull(30, 2, 12);
  const auto c = simulate_weibull(30, 2, 13);
  CHECK(a.data.y == b.data.y);
  CHECK(a.data.columns == b.data.columns);
  CHECK(a.data.y != c.data.y);
}

TEST_CASE("gaussian sampler treats the second parameter as the standard deviation") {
  std::mt19937_64 rng(2025);
  const int n = 100000;
  std::vector<double> draws(static_cast<std::size_t>(n));
  const double sigma = std::exp(2.0);
  for (double& v : draws) v = sample_gaussian_response(0.0, sigma, rng);
  const double sd = std::sqrt(variance(draws));
  CHECK(sd == doctest::Approx(sigma).epsilon(0.05));
}

TEST_CASE("negbin sampler matches the mean-variance identity") {
  std::mt19937_64 rng(2026);
  const int n = 100000;
  const double mu = 2.0, alpha = 0.5;
  std::vector<double> draws(static_cast<std::size_t>(n));
  for (double& v : draws) v = sample_negbin_response(mu, alpha, rng);
  CHECK(mean(draws) == doctest::Approx(mu).epsilon(0.05));
  CHECK(variance(draws) / (mu + alpha * mu * mu) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("pinning the overdispersion to zero recovers poisson dispersion") {
  std::mt19937_64 rng(2027);
  const int n = 100000;
  std::vector<double> draws(static_cast<std::size_t>(n));
  for (double& v : draws) v = sample_negbin_response(1.7, 1e-8, rng);
  CHECK(variance(draws) / mean(draws) == doctest::Approx(1.0).epsilon(0.02));

  // the override hook removes the covariate-driven overdispersion
  const auto poissonish = simulate_negbin(40000, 0, 2127, 1e-8);
  const auto overdispersed = simulate_negbin(40000, 0, 2127);
  const auto stratum_dispersion = [](const SimulatedData& sim) {
    std::vector<double> y0;
    for (int i = 0; i < sim.data.n(); ++i) {
      bool base = true;  // fix the three binary covariates at zero
      for (int j = 3; j < 6; ++j)
        if (sim.data.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != 0.0)
          base = false;
      if (base) y0.push_back(sim.data.y[static_cast<std::size_t>(i)]);
    }
    return variance(y0) / mean(y0);
  };
  CHECK(stratum_dispersion(poissonish) < 1.25);
  CHECK(stratum_dispersion(overdispersed) > 1.4);
}

TEST_CASE("weibull sampler reduces to the exponential at unit parameters") {
  std::mt19937_64 rng(2028);
  const int n = 100000;
  std::vector<double> draws(static_cast<std::size_t>(n));
  for (double& v : draws) v = sample_weibull_response(1.0, 1.0, rng);
  CHECK(mean(draws) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("weibull sampler hits the closed-form median") {
  std::mt19937_64 rng(2029);
  const int n = 100000;
  const double lambda = 2.0, k = 1.5;
  std::vector<double> draws(static_cast<std::size_t>(n));
  for (double& v : draws) v = sample_weibull_response(lambda, k, rng);
  std::nth_element(draws.begin(), draws.begin() + n / 2, draws.end());
  const double expected = lambda * std::pow(std::log(2.0), 1.0 / k);
  CHECK(draws[static_cast<std::size_t>(n / 2)] == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("a one-replicate study emits one record per cell") {
  StudyConfig cfg;
  cfg.setting = Family::WeibullSS;
  cfg.schemes = {"F-F", "A-BL"};
  cfg.replicates = 1;
  cfg.n = 120;
  cfg.noise_levels = {0, 2};
  cfg.cv_folds = 4;
  cfg.seed = 3;
  cfg.max_mstop_override = 30;
  const auto res = run_study(cfg);
  CHECK(res.records.size() == 4);
  for (const auto& rec : res.records) {
    CHECK(rec.m_stop >= 1);
    CHECK(rec.m_stop <= 30);
    CHECK(rec.model.names.size() == rec.truth.slopes[0].size());
  }
  // identical data per (noise, replicate) across schemes
  CHECK(res.records[0].noise == 0);
  CHECK(res.records[2].noise == 0);
  CHECK(res.records[0].scheme == "F-F");
  CHECK(res.records[2].scheme == "A-BL");
}

TEST_CASE("study results are deterministic given the seed") {
  StudyConfig cfg;
  cfg.setting = Family::GaussianLS;
  cfg.schemes = {"A-BL"};
  cfg.replicates = 2;
  cfg.n = 100;
  cfg.noise_levels = {0};
  cfg.cv_folds = 4;
  cfg.seed = 14;
  cfg.max_mstop_override = 25;
  cfg.record_timing = false;
  cfg.jobs = 2;
  const auto a = run_study(cfg);
  cfg.jobs = 1;
  const auto b = run_study(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].m_stop == b.records[i].m_stop);
    CHECK(a.records[i].metrics.scr == b.records[i].metrics.scr);
    CHECK(a.records[i].model.coef.beta[0] == b.records[i].model.coef.beta[0]);
    CHECK(a.records[i].seconds == 0.0);
  }
}
