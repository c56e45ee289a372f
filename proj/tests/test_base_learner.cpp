#include <doctest.h>

#include <cmath>
#include <random>

#include "gamboost/base_learner.hpp"

using namespace gamboost;

TEST_CASE("exact linear relation is fit without residual") {
  const std::vector<double> x{-1.0, 0.0, 1.0, 2.0};
  std::vector<double> u;
  for (double v : x) u.push_back(2.0 * v);
  const auto b = fit_linear(u, x);
  CHECK(b.intercept == doctest::Approx(0.0));
  CHECK(b.slope == doctest::Approx(2.0));
  CHECK(b.ssr == doctest::Approx(0.0));
}

TEST_CASE("constant gradient yields a flat fit") {
  const std::vector<double> x{1.0, 2.0, 3.0};
  const std::vector<double> u{4.0, 4.0, 4.0};
  const auto b = fit_linear(u, x);
  CHECK(b.intercept == doctest::Approx(4.0));
  CHECK(b.slope == doctest::Approx(0.0));
  for (double h : b.fitted) CHECK(h == doctest::Approx(4.0));
}

TEST_CASE("constant covariate degrades to the mean fit") {
  const std::vector<double> x{3.0, 3.0, 3.0, 3.0};
  const std::vector<double> u{1.0, 2.0, 3.0, 6.0};
  const auto b = fit_linear(u, x);
  CHECK(b.slope == 0.0);
  CHECK(b.intercept == doctest::Approx(3.0));
}

TEST_CASE("ols matches the normal-equations oracle") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> uni(-5.0, 5.0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 5 + static_cast<int>(rng() % 50);
    std::vector<double> x, u;
    for (int i = 0; i < n; ++i) {
      x.push_back(uni(rng));
      u.push_back(uni(rng));
    }
    const auto b = fit_linear(u, x);

    // 2x2 normal equations solved by Cramer's rule in long double
    long double sx = 0, sxx = 0, su = 0, sxu = 0;
    for (int i = 0; i < n; ++i) {
      sx += x[static_cast<std::size_t>(i)];
      sxx += static_cast<long double>(x[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
      su += u[static_cast<std::size_t>(i)];
      sxu += static_cast<long double>(x[static_cast<std::size_t>(i)]) * u[static_cast<std::size_t>(i)];
    }
    const long double det = static_cast<long double>(n) * sxx - sx * sx;
    const long double a = (su * sxx - sx * sxu) / det;
    const long double slope = (static_cast<long double>(n) * sxu - sx * su) / det;
    CHECK(std::abs(b.intercept - static_cast<double>(a)) < 1e-10);
    CHECK(std::abs(b.slope - static_cast<double>(slope)) < 1e-10);

    double ssr = 0, sqn = 0;
    for (int i = 0; i < n; ++i) {
      const double h = b.intercept + b.slope * x[static_cast<std::size_t>(i)];
      ssr += (u[static_cast<std::size_t>(i)] - h) * (u[static_cast<std::size_t>(i)] - h);
      sqn += h * h;
    }
    CHECK(b.ssr == doctest::Approx(ssr).epsilon(1e-12));
    CHECK(b.sqnorm == doctest::Approx(sqn).epsilon(1e-12));
  }
}

TEST_CASE("fit is invariant to covariate scaling") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  std::vector<double> x, u;
  for (int i = 0; i < 30; ++i) {
    x.push_back(uni(rng));
    u.push_back(uni(rng));
  }
  const auto base = fit_linear(u, x);
  for (double c : {2.0, -0.5, 1000.0}) {
    std::vector<double> xs;
    for (double v : x) xs.push_back(c * v);
    const auto scaled = fit_linear(u, xs);
    for (std::size_t i = 0; i < x.size(); ++i)
      CHECK(scaled.fitted[i] == doctest::Approx(base.fitted[i]).epsilon(1e-12));
  }
}

TEST_CASE("the perfect predictor beats a noisy one") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> x, noisy, u;
  for (int i = 0; i < 40; ++i) {
    const double v = uni(rng);
    x.push_back(v);
    noisy.push_back(2.0 * v + 0.3 * uni(rng));
    u.push_back(v);
  }
  const auto best = select_best(u, {x, noisy});
  CHECK(best.covariate == 0);
  CHECK(best.ssr == doctest::Approx(0.0));
}

TEST_CASE("duplicated columns resolve to the smallest index") {
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> x, u;
  for (int i = 0; i < 25; ++i) {
    x.push_back(uni(rng));
    u.push_back(uni(rng));
  }
  const auto best = select_best(u, {x, x, x});
  CHECK(best.covariate == 0);
}

TEST_CASE("selection equals an exhaustive scan") {
  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 20, p = 10;
    std::vector<std::vector<double>> cols(p);
    std::vector<double> u;
    for (int i = 0; i < n; ++i) u.push_back(uni(rng));
    for (auto& c : cols)
      for (int i = 0; i < n; ++i) c.push_back(uni(rng));

    int best_j = 0;
    double best_ssr = fit_linear(u, cols[0]).ssr;
    for (int j = 1; j < p; ++j) {
      const double ssr = fit_linear(u, cols[static_cast<std::size_t>(j)]).ssr;
      if (ssr < best_ssr) {
        best_ssr = ssr;
        best_j = j;
      }
    }
    const auto got = select_best(u, cols);
    CHECK(got.covariate == best_j);
    for (int j = 0; j < p; ++j)
      CHECK(got.ssr <= fit_linear(u, cols[static_cast<std::size_t>(j)]).ssr + 1e-12);
  }
}
