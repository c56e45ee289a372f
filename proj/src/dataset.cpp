#include "gamboost/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gamboost/numeric.hpp"

namespace gamboost {

Family family_from_string(const std::string& s) {
  if (s == "gaussian") return Family::GaussianLS;
  if (s == "negbin") return Family::NegBinLS;
  if (s == "weibull") return Family::WeibullSS;
  throw std::invalid_argument("unknown family '" + s + "' (expected gaussian, negbin or weibull)");
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::GaussianLS: return "gaussian";
    case Family::NegBinLS: return "negbin";
    case Family::WeibullSS: return "weibull";
  }
  return "?";
}

void Dataset::validate() const {
  const auto rows = y.size();
  if (rows == 0) throw std::invalid_argument("dataset: empty response");
  if (columns.size() != names.size())
    throw std::invalid_argument("dataset: column/name count mismatch");
  for (double v : y)
    if (!std::isfinite(v)) throw std::invalid_argument("dataset: non-finite response value");
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw std::invalid_argument("dataset: column '" + names[j] + "' has wrong length");
    for (double v : columns[j])
      if (!std::isfinite(v))
        throw std::invalid_argument("dataset: non-finite value in column '" + names[j] + "'");
  }
}

void Dataset::validate_for(Family f) const {
  validate();
  switch (f) {
    case Family::GaussianLS:
      break;
    case Family::NegBinLS:
      for (double v : y) {
        if (v < 0.0 || v != std::floor(v))
          throw std::invalid_argument(
              "dataset: negative-binomial response must be a non-negative integer count");
      }
      break;
    case Family::WeibullSS:
      for (double v : y)
        if (!(v > 0.0))
          throw std::invalid_argument("dataset: Weibull response must be strictly positive");
      break;
  }
}

Dataset Dataset::subset(const std::vector<int>& rows) const {
  Dataset out;
  out.names = names;
  out.y.reserve(rows.size());
  for (int r : rows) out.y.push_back(y[static_cast<std::size_t>(r)]);
  out.columns.resize(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out.columns[j].reserve(rows.size());
    for (int r : rows) out.columns[j].push_back(columns[j][static_cast<std::size_t>(r)]);
  }
  return out;
}

std::pair<Dataset, Dataset> split_holdout(const Dataset& d, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw std::invalid_argument("split_holdout: fraction must lie in (0,1)");
  if (d.n() < 3) throw std::invalid_argument("split_holdout: need at least 3 rows");

  std::vector<int> idx(static_cast<std::size_t>(d.n()));
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);

  const auto n_val = static_cast<std::size_t>(std::llround(fraction * d.n()));
  std::vector<int> val_rows(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_val));
  std::vector<int> train_rows(idx.begin() + static_cast<std::ptrdiff_t>(n_val), idx.end());
  std::sort(val_rows.begin(), val_rows.end());
  std::sort(train_rows.begin(), train_rows.end());
  return {d.subset(train_rows), d.subset(val_rows)};
}

Dataset standardize_covariates(const Dataset& d) {
  Dataset out = d;
  for (auto& col : out.columns) {
    const double m = mean(col);
    const double s = std::sqrt(variance(col));
    if (s <= 0.0) continue;
    for (double& v : col) v = (v - m) / s;
  }
  return out;
}

}  // namespace gamboost
