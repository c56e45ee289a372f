#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "gamboost/dataset.hpp"

namespace gamboost {

inline constexpr int kNumParams = 2;  // all supported families are two-parameter

using EtaVectors = std::array<std::vector<double>, kNumParams>;

enum class Link { Identity, Log };

// One of the three location/scale(/shape) families. Parameter order is fixed:
// Gaussian (mu, sigma), negative binomial (mu, alpha), Weibull (lambda, k).
class FamilyModel {
 public:
  static FamilyModel make(Family id);

  Family id() const { return id_; }
  Link link(int k) const { return links_[static_cast<std::size_t>(k)]; }
  const std::string& param_name(int k) const { return names_[static_cast<std::size_t>(k)]; }
  int param_index(const std::string& name) const;

  double link_apply(int k, double theta) const;
  double link_inverse(int k, double eta) const;

  // Negative log-likelihood, summed over observations. Throws if any
  // per-observation term is non-finite, naming the observation.
  double neg_log_lik(const EtaVectors& etas, std::span<const double> y) const;

  // Same sum with eta_k shifted by nu*h; non-finite terms yield +infinity
  // instead of throwing (used by line search and candidate evaluation,
  // where an astronomically bad probe must compare as "worse", not abort).
  double neg_log_lik_shifted_safe(const EtaVectors& etas, int k, double nu,
                                  std::span<const double> h, std::span<const double> y) const;

  // u_i = d l_i / d eta_{k,i}
  std::vector<double> negative_gradient(int k, const EtaVectors& etas,
                                        std::span<const double> y) const;

  // Intercept-only maximum-likelihood offsets on the link scale.
  std::array<double, kNumParams> init_offsets(std::span<const double> y) const;

 private:
  explicit FamilyModel(Family id);

  Family id_;
  std::array<Link, kNumParams> links_;
  std::array<std::string, kNumParams> names_;
};

}  // namespace gamboost
