#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gamboost {

enum class Family { GaussianLS, NegBinLS, WeibullSS };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// Immutable after construction; shared freely across workers.
struct Dataset {
  std::vector<double> y;
  std::vector<std::vector<double>> columns;  // p columns of length n
  std::vector<std::string> names;            // p labels

  int n() const { return static_cast<int>(y.size()); }
  int p() const { return static_cast<int>(columns.size()); }

  // shape + finiteness invariants; throws std::invalid_argument
  void validate() const;
  // validate() plus the family's response-domain requirements
  void validate_for(Family f) const;

  Dataset subset(const std::vector<int>& rows) const;
};

// Disjoint row partition with |validation| = round(fraction * n),
// deterministic in seed. Row order within each part is ascending.
std::pair<Dataset, Dataset> split_holdout(const Dataset& d, double fraction, std::uint64_t seed);

// Centers and scales every covariate column to unit ML standard deviation
// (constant columns are left untouched). Returns the transformed copy.
Dataset standardize_covariates(const Dataset& d);

}  // namespace gamboost
