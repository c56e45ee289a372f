#include "gamboost/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gamboost/numeric.hpp"

namespace gamboost {

namespace {

constexpr double kHalfLog2Pi = 0.9189385332046727;
constexpr double kAlphaFloor = 1e-4;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ln Gamma(y + 1/alpha) - ln Gamma(1/alpha) for integer y >= 0, written as
// sum_{r=0}^{y-1} ln(r + 1/alpha). The r = 0 term is -eta_alpha exactly,
// which keeps the expression finite for arbitrarily large eta_alpha.
double log_gamma_ratio(long long yi, double inv_alpha, double eta_alpha) {
  if (yi <= 0) return 0.0;
  if (yi > 100000) return std::lgamma(static_cast<double>(yi) + inv_alpha) - std::lgamma(inv_alpha);
  double s = -eta_alpha;
  for (long long r = 1; r < yi; ++r) s += std::log(static_cast<double>(r) + inv_alpha);
  return s;
}

struct GaussianObs {
  static double nll(double eta_mu, double eta_sigma, double y) {
    const double r = y - eta_mu;
    return kHalfLog2Pi + eta_sigma + 0.5 * r * r * std::exp(-2.0 * eta_sigma);
  }
};

struct NegBinObs {
  static double nll(double eta_mu, double eta_alpha, double y) {
    const long long yi = std::llround(y);
    const double inv_alpha = std::exp(-eta_alpha);
    const double z = softplus(eta_alpha + eta_mu);  // ln(1 + alpha*mu)
    double l = -y * (eta_alpha + eta_mu) + y * z + inv_alpha * z -
               log_gamma_ratio(yi, inv_alpha, eta_alpha);
    if (yi > 1) l += std::lgamma(y + 1.0);
    return l;
  }
};

struct WeibullObs {
  static double nll(double eta_lambda, double eta_k, double y) {
    const double k = std::exp(eta_k);
    const double log_ratio = std::log(y) - eta_lambda;
    return -eta_k + k * eta_lambda - (k - 1.0) * std::log(y) + std::exp(k * log_ratio);
  }
};

template <class Obs>
double sum_nll(const EtaVectors& etas, std::span<const double> y) {
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double term = Obs::nll(etas[0][i], etas[1][i], y[i]);
    if (!std::isfinite(term))
      throw std::runtime_error("non-finite log-likelihood term at observation " +
                               std::to_string(i + 1));
    total += term;
  }
  return total;
}

template <class Obs>
double sum_nll_shifted_safe(const EtaVectors& etas, int k, double nu, std::span<const double> h,
                            std::span<const double> y) {
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double e0 = k == 0 ? etas[0][i] + nu * h[i] : etas[0][i];
    const double e1 = k == 1 ? etas[1][i] + nu * h[i] : etas[1][i];
    const double term = Obs::nll(e0, e1, y[i]);
    if (!std::isfinite(term)) return kInf;
    total += term;
  }
  return std::isfinite(total) ? total : kInf;
}

}  // namespace

FamilyModel::FamilyModel(Family id) : id_(id) {
  switch (id) {
    case Family::GaussianLS:
      links_ = {Link::Identity, Link::Log};
      names_ = {"mu", "sigma"};
      break;
    case Family::NegBinLS:
      links_ = {Link::Log, Link::Log};
      names_ = {"mu", "alpha"};
      break;
    case Family::WeibullSS:
      links_ = {Link::Log, Link::Log};
      names_ = {"lambda", "k"};
      break;
  }
}

FamilyModel FamilyModel::make(Family id) { return FamilyModel(id); }

int FamilyModel::param_index(const std::string& name) const {
  for (int k = 0; k < kNumParams; ++k)
    if (names_[static_cast<std::size_t>(k)] == name) return k;
  throw std::invalid_argument("unknown parameter name '" + name + "'");
}

double FamilyModel::link_apply(int k, double theta) const {
  return link(k) == Link::Identity ? theta : std::log(theta);
}

double FamilyModel::link_inverse(int k, double eta) const {
  return link(k) == Link::Identity ? eta : std::exp(eta);
}

double FamilyModel::neg_log_lik(const EtaVectors& etas, std::span<const double> y) const {
  switch (id_) {
    case Family::GaussianLS: return sum_nll<GaussianObs>(etas, y);
    case Family::NegBinLS: return sum_nll<NegBinObs>(etas, y);
    case Family::WeibullSS: return sum_nll<WeibullObs>(etas, y);
  }
  return 0.0;
}

double FamilyModel::neg_log_lik_shifted_safe(const EtaVectors& etas, int k, double nu,
                                             std::span<const double> h,
                                             std::span<const double> y) const {
  switch (id_) {
    case Family::GaussianLS: return sum_nll_shifted_safe<GaussianObs>(etas, k, nu, h, y);
    case Family::NegBinLS: return sum_nll_shifted_safe<NegBinObs>(etas, k, nu, h, y);
    case Family::WeibullSS: return sum_nll_shifted_safe<WeibullObs>(etas, k, nu, h, y);
  }
  return 0.0;
}

std::vector<double> FamilyModel::negative_gradient(int k, const EtaVectors& etas,
                                                   std::span<const double> y) const {
  const std::size_t n = y.size();
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double e0 = etas[0][i];
    const double e1 = etas[1][i];
    const double yi = y[i];
    double g = 0.0;
    switch (id_) {
      case Family::GaussianLS: {
        const double inv_var = std::exp(-2.0 * e1);
        const double r = yi - e0;
        g = k == 0 ? r * inv_var : r * r * inv_var - 1.0;
        break;
      }
      case Family::NegBinLS: {
        const double mu = std::exp(e0);
        const double alpha_mu = std::exp(e0 + e1);
        if (k == 0) {
          g = (yi - mu) / (1.0 + alpha_mu);
        } else {
          const double inv_alpha = std::exp(-e1);
          const double z = softplus(e0 + e1);  // ln(1 + alpha*mu)
          g = yi - alpha_mu * (yi + inv_alpha) / (1.0 + alpha_mu) +
              inv_alpha * (z - digamma(yi + inv_alpha) + digamma(inv_alpha));
        }
        break;
      }
      case Family::WeibullSS: {
        const double kk = std::exp(e1);
        const double log_ratio = std::log(yi) - e0;
        const double w = std::exp(kk * log_ratio);  // (y/lambda)^k
        g = k == 0 ? kk * (w - 1.0) : 1.0 + kk * log_ratio * (1.0 - w);
        break;
      }
    }
    if (!std::isfinite(g))
      throw std::runtime_error("non-finite gradient at observation " + std::to_string(i + 1));
    u[i] = g;
  }
  return u;
}

namespace {

// profile score for ln(alpha) with mu fixed at mean(y); equals the summed
// eta_alpha-gradient of the negative binomial log-likelihood
double nb_alpha_score(double log_alpha, double log_mu, std::span<const double> y) {
  const double alpha_mu = std::exp(log_alpha + log_mu);
  const double inv_alpha = std::exp(-log_alpha);
  const double z = softplus(log_alpha + log_mu);
  double s = 0.0;
  for (double yi : y)
    s += yi - alpha_mu * (yi + inv_alpha) / (1.0 + alpha_mu) +
         inv_alpha * (z - digamma(yi + inv_alpha) + digamma(inv_alpha));
  return s;
}

std::array<double, 2> gaussian_offsets(std::span<const double> y) {
  const double v = variance(y);
  if (!(v > 0.0)) throw std::invalid_argument("init_offsets: response variance must be positive");
  return {mean(y), 0.5 * std::log(v)};
}

std::array<double, 2> negbin_offsets(std::span<const double> y) {
  const double m = mean(y);
  const double v = variance(y);
  if (!(v > 0.0)) throw std::invalid_argument("init_offsets: response variance must be positive");
  const double log_mu = std::log(m);

  // moment estimate of the overdispersion as the starting point
  double theta = std::log(std::max((v - m) / (m * m), 1e-3));
  const double theta_floor = std::log(kAlphaFloor);
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    const double s = nb_alpha_score(theta, log_mu, y);
    if (std::abs(s) < 1e-8) {
      converged = true;
      break;
    }
    if (theta <= theta_floor && s < 0.0) {
      // likelihood decreasing in alpha; boundary optimum at the floor
      return {log_mu, theta_floor};
    }
    const double hstep = 1e-6;
    const double ds = (nb_alpha_score(theta + hstep, log_mu, y) -
                       nb_alpha_score(theta - hstep, log_mu, y)) /
                      (2.0 * hstep);
    double delta;
    if (ds < -1e-12) {
      delta = -s / ds;
    } else {
      delta = s > 0.0 ? 0.5 : -0.5;  // move uphill when curvature is unusable
    }
    delta = std::clamp(delta, -2.0, 2.0);
    theta = std::clamp(theta + delta, std::log(1e-8), std::log(1e8));
  }
  if (!converged)
    throw std::runtime_error("init_offsets: overdispersion estimate did not converge in 100 steps");
  return {log_mu, std::max(theta, theta_floor)};
}

std::array<double, 2> weibull_offsets(std::span<const double> y) {
  const double m = mean(y);
  const double v = variance(y);
  if (!(v > 0.0)) throw std::invalid_argument("init_offsets: response variance must be positive");

  // method-of-moments start (Justus approximation for the shape)
  const double cv = std::sqrt(v) / m;
  const double k0 = std::clamp(std::pow(cv, -1.086), 0.02, 500.0);
  double eta_k = std::log(k0);
  double eta_l = std::log(m / std::tgamma(1.0 + 1.0 / k0));

  const std::size_t n = y.size();
  for (int it = 0; it < 100; ++it) {
    const double k = std::exp(eta_k);
    double s_l = 0.0, s_k = 0.0;
    double j_ll = 0.0, j_lk = 0.0, j_kk = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double lr = std::log(y[i]) - eta_l;
      const double w = std::exp(k * lr);
      s_l += k * (w - 1.0);
      s_k += 1.0 + k * lr * (1.0 - w);
      j_ll += -k * k * w;
      j_lk += k * (w - 1.0) + k * k * lr * w;
      j_kk += k * lr * (1.0 - w) - k * k * lr * lr * w;
    }
    if (std::max(std::abs(s_l), std::abs(s_k)) < 1e-9) return {eta_l, eta_k};

    const double det = j_ll * j_kk - j_lk * j_lk;
    double d_l, d_k;
    if (std::abs(det) > 1e-12) {
      d_l = -(j_kk * s_l - j_lk * s_k) / det;
      d_k = -(-j_lk * s_l + j_ll * s_k) / det;
    } else {
      d_l = s_l > 0.0 ? 0.25 : -0.25;
      d_k = s_k > 0.0 ? 0.25 : -0.25;
    }
    eta_l += std::clamp(d_l, -1.5, 1.5);
    eta_k += std::clamp(d_k, -1.5, 1.5);
  }
  throw std::runtime_error("init_offsets: Weibull Newton did not converge in 100 steps");
}

}  // namespace

std::array<double, kNumParams> FamilyModel::init_offsets(std::span<const double> y) const {
  if (y.size() < 2) throw std::invalid_argument("init_offsets: need at least 2 observations");
  switch (id_) {
    case Family::GaussianLS: return gaussian_offsets(y);
    case Family::NegBinLS: return negbin_offsets(y);
    case Family::WeibullSS: return weibull_offsets(y);
  }
  return {0.0, 0.0};
}

}  // namespace gamboost
