#include <doctest.h>

#include <cmath>
#include <random>

#include "gamboost/boost.hpp"
#include "gamboost/simulation.hpp"
#include "test_util.hpp"

using namespace gamboost;

namespace {

Dataset noise_only_gaussian(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(5.0, 3.0);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Dataset d;
  d.names = {"x1", "x2"};
  d.columns.resize(2);
  for (int i = 0; i < n; ++i) {
    d.y.push_back(gauss(rng));
    d.columns[0].push_back(uni(rng));
    d.columns[1].push_back(uni(rng));
  }
  return d;
}

}  // namespace

TEST_CASE("the scale parameter wins the first iteration on pure-noise gaussian data") {
  // no mean structure: the location gradient is tiny relative to the scale gradient
  const Dataset d = noise_only_gaussian(300, 1);
  FitConfig cfg;
  cfg.family = Family::GaussianLS;
  cfg.scheme = SchemeSpec::preset("F-F", cfg.family);
  cfg.m_stop = 1;
  const auto res = boost_fit(d, cfg);
  REQUIRE(res.trace.rows.size() == 2);
  for (const auto& row : res.trace.rows)
    if (row.applied) CHECK(row.param == 1);
}

TEST_CASE("exactly one parameter is updated per iteration") {
  const auto sim = simulate_gaussian(120, 0, 8);
  FitConfig cfg;
  cfg.family = Family::GaussianLS;
  cfg.scheme = SchemeSpec::preset("F-F", cfg.family);
  cfg.m_stop = 5;
  const auto res = boost_fit(sim.data, cfg);
  CHECK(res.model.m_stop == 5);
  CHECK(res.trace.rows.size() == 10);  // K rows per iteration
  int applied = 0;
  for (int m = 1; m <= 5; ++m) {
    int per_iteration = 0;
    for (const auto& row : res.trace.rows)
      if (row.iteration == m && row.applied) ++per_iteration;
    CHECK(per_iteration == 1);
    applied += per_iteration;
  }
  CHECK(applied == 5);
}

TEST_CASE("the applied candidate has the lowest recorded loss") {
  for (const char* scheme : {"F-F", "LS-LS", "A-BL"}) {
    const auto sim = simulate_negbin(150, 0, 21);
    FitConfig cfg;
    cfg.family = Family::NegBinLS;
    cfg.scheme = SchemeSpec::preset(scheme, cfg.family);
    cfg.m_stop = 30;
    const auto res = boost_fit(sim.data, cfg);
    for (int m = 1; m <= cfg.m_stop; ++m) {
      double applied_loss = 0.0, other_loss = 0.0;
      for (const auto& row : res.trace.rows)
        if (row.iteration == m) (row.applied ? applied_loss : other_loss) = row.loss;
      CHECK(applied_loss <= other_loss);
    }
  }
}

TEST_CASE("in-sample loss is monotone under shrunk optimal steps") {
  for (Family f : {Family::GaussianLS, Family::NegBinLS}) {
    const auto sim = simulate(f, 120, 0, 33);
    FitConfig cfg;
    cfg.family = f;
    cfg.scheme = SchemeSpec::preset("LS-LS", f);
    cfg.m_stop = 80;
    const auto res = boost_fit(sim.data, cfg);
    double prev = res.trace.initial_loss;
    for (const auto& row : res.trace.rows) {
      if (!row.applied) continue;
      CHECK(row.loss <= prev + 1e-12);
      prev = row.loss;
    }
  }
}

TEST_CASE("trace zeta is exactly nu times the squared norm") {
  const auto sim = simulate_weibull(100, 0, 55);
  FitConfig cfg;
  cfg.family = Family::WeibullSS;
  cfg.scheme = SchemeSpec::preset("A-BL", cfg.family);
  cfg.m_stop = 40;
  const auto res = boost_fit(sim.data, cfg);
  for (const auto& row : res.trace.rows) CHECK(row.zeta == row.nu * row.sqnorm);
}

TEST_CASE("ratio schemes equalize the update sizes every iteration") {
  struct Case {
    Family family;
    const char* scheme;
  };
  for (const Case& c : {Case{Family::GaussianLS, "A-BL"}, Case{Family::GaussianLS, "BL-F"},
                        Case{Family::NegBinLS, "A-BL"}, Case{Family::NegBinLS, "F-BL"},
                        Case{Family::WeibullSS, "A-BL"}, Case{Family::WeibullSS, "F-BL"}}) {
    const auto sim = simulate(c.family, 150, 0, 66);
    FitConfig cfg;
    cfg.family = c.family;
    cfg.scheme = SchemeSpec::preset(c.scheme, c.family);
    cfg.m_stop = 50;
    const auto res = boost_fit(sim.data, cfg);
    for (int m = 1; m <= cfg.m_stop; ++m) {
      double z0 = -1.0, z1 = -1.0;
      for (const auto& row : res.trace.rows)
        if (row.iteration == m) (row.param == 0 ? z0 : z1) = row.zeta;
      CHECK(std::abs(z0 - z1) <= 1e-14 * std::max(std::abs(z0), std::abs(z1)));
    }
  }
}

TEST_CASE("single-covariate gaussian boosting recovers the least-squares slope") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::normal_distribution<double> noise(0.0, 0.8);
  Dataset d;
  d.names = {"x"};
  d.columns.resize(1);
  const int n = 200;
  for (int i = 0; i < n; ++i) {
    const double x = uni(rng);
    d.columns[0].push_back(x);
    d.y.push_back(1.0 + 2.5 * x + noise(rng));
  }

  FitConfig cfg;
  cfg.family = Family::GaussianLS;
  cfg.scheme.label = "A-hold";  // location analytic, scale frozen (test-only)
  cfg.scheme.lambda_s = 0.1;
  cfg.scheme.rules[0].kind = StepRuleKind::Analytic;
  cfg.scheme.rules[0].lo = 0.0;
  cfg.scheme.rules[0].hi = 10.0;
  cfg.scheme.rules[1].kind = StepRuleKind::Fixed;
  cfg.scheme.rules[1].fixed_value = 0.0;
  cfg.m_stop = 500;
  const auto res = boost_fit(d, cfg);

  // closed-form simple regression slope
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = d.columns[0][static_cast<std::size_t>(i)], yy = d.y[static_cast<std::size_t>(i)];
    sx += x;
    sy += yy;
    sxx += x * x;
    sxy += x * yy;
  }
  const double ols_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(std::abs(res.model.coef.beta[0][0] - ols_slope) < 1e-3 * std::abs(ols_slope));
}

TEST_CASE("predictors stay consistent with the accumulated coefficients") {
  for (int m_stop : {1, 2, 3, 5, 8, 13, 50}) {
    const auto sim = simulate_negbin(120, 0, 99);
    FitConfig cfg;
    cfg.family = Family::NegBinLS;
    cfg.scheme = SchemeSpec::preset("A-BL", cfg.family);
    cfg.m_stop = m_stop;
    const auto res = boost_fit(sim.data, cfg);
    const EtaVectors recomputed = predict_link(res.model, sim.data);
    for (int k = 0; k < kNumParams; ++k) {
      for (int i = 0; i < sim.data.n(); ++i) {
        const double a = res.final_etas[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        const double b = recomputed[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
      }
    }
  }
}

TEST_CASE("predict maps zero-coefficient models to the offsets") {
  FittedModel model;
  model.family = Family::WeibullSS;
  model.offsets = {std::log(2.0), std::log(1.5)};
  model.coef.init(3);
  model.names = {"a", "b", "c"};
  const std::vector<std::vector<double>> cols{{0.1, 0.2}, {1.0, -1.0}, {0.0, 5.0}};
  const auto out = predict(model, cols, 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(out[0][static_cast<std::size_t>(i)] == doctest::Approx(2.0));
    CHECK(out[1][static_cast<std::size_t>(i)] == doctest::Approx(1.5));
  }
  CHECK_THROWS(predict(model, {{1.0}}, 1));  // column-count mismatch
}

TEST_CASE("an intercept-only fit keeps the offsets untouched") {
  std::mt19937_64 rng(111);
  std::normal_distribution<double> gauss(1.0, 2.0);
  Dataset d;
  for (int i = 0; i < 50; ++i) d.y.push_back(gauss(rng));
  FitConfig cfg;
  cfg.family = Family::GaussianLS;
  cfg.scheme = SchemeSpec::preset("F-F", cfg.family);
  cfg.m_stop = 25;
  const auto res = boost_fit(d, cfg);
  CHECK(res.trace.rows.empty());
  CHECK(res.model.m_stop == 0);
  const FamilyModel fam = FamilyModel::make(Family::GaussianLS);
  const auto off = fam.init_offsets(d.y);
  CHECK(res.model.offsets[0] == off[0]);
  CHECK(res.model.offsets[1] == off[1]);
  CHECK(res.model.coef.beta0[0] == 0.0);
  CHECK(res.model.coef.beta0[1] == 0.0);
}

TEST_CASE("fitting is deterministic") {
  const auto sim = simulate_weibull(100, 2, 123);
  FitConfig cfg;
  cfg.family = Family::WeibullSS;
  cfg.scheme = SchemeSpec::preset("A-LS", cfg.family);
  cfg.m_stop = 40;
  const auto a = boost_fit(sim.data, cfg);
  const auto b = boost_fit(sim.data, cfg);
  REQUIRE(a.trace.rows.size() == b.trace.rows.size());
  for (std::size_t i = 0; i < a.trace.rows.size(); ++i) {
    CHECK(a.trace.rows[i].nu == b.trace.rows[i].nu);
    CHECK(a.trace.rows[i].loss == b.trace.rows[i].loss);
    CHECK(a.trace.rows[i].covariate == b.trace.rows[i].covariate);
    CHECK(a.trace.rows[i].applied == b.trace.rows[i].applied);
  }
}

TEST_CASE("configuration errors are rejected up front") {
  const auto sim = simulate_gaussian(50, 0, 5);
  FitConfig cfg;
  cfg.family = Family::GaussianLS;
  cfg.scheme = SchemeSpec::preset("F-F", cfg.family);
  cfg.m_stop = 0;
  CHECK_THROWS(boost_fit(sim.data, cfg));

  cfg.m_stop = 10;
  cfg.family = Family::WeibullSS;  // gaussian draws can be negative
  CHECK_THROWS(boost_fit(sim.data, cfg));
}
