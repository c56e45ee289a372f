#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gamboost {

double mean(std::span<const double> v);

// population variance (divides by n)
double variance(std::span<const double> v);

double dot(std::span<const double> a, std::span<const double> b);

// psi(x) for x > 0, via recurrence into the asymptotic regime.
// Accurate to ~1e-12 for the argument ranges used here.
double digamma(double x);

// log(1 + exp(x)) without overflow
double softplus(double x);

struct Quartiles {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};

// linear interpolation between order statistics (R type-7 convention);
// sorts a copy, v must be non-empty
double quantile_type7(std::vector<double> v, double p);
Quartiles quartiles(const std::vector<double>& v);

// half-up rounding to the nearest integer
long long round_half_up(double x);

// splitmix64-style mixing for deriving independent sub-stream seeds
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

// shortest round-trip decimal representation (locale-independent)
std::string format_double(double x);

}  // namespace gamboost
