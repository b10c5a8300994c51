#pragma once

// Shared helpers for the test binaries: seeded parameter draws and
// coefficient-wise comparisons.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "schlicht/class_params.hpp"
#include "schlicht/series.hpp"

namespace testing {

using cd = std::complex<double>;
using schlicht::ClassParams;
using schlicht::ComplexSeries;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cd random_unit_bidisk(std::mt19937_64& rng) {
  return {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
}

inline ComplexSeries random_series(std::mt19937_64& rng, Eigen::Index order, bool zero_constant = false) {
  ComplexSeries::Coeffs c(order + 1);
  for (Eigen::Index k = 0; k <= order; ++k) c(k) = random_unit_bidisk(rng);
  if (zero_constant) c(0) = 0.0;
  return ComplexSeries(std::move(c));
}

// Constant term exactly 1, remaining coefficients shrinking like 2^-k so the
// series stays well inside the region where log and pow are tame.
inline ComplexSeries random_unit_series(std::mt19937_64& rng, Eigen::Index order) {
  ComplexSeries::Coeffs c(order + 1);
  c(0) = 1.0;
  for (Eigen::Index k = 1; k <= order; ++k) c(k) = random_unit_bidisk(rng) * std::pow(0.5, double(k));
  return ComplexSeries(std::move(c));
}

inline ClassParams random_params(std::mt19937_64& rng, double max_gamma = 3.0) {
  ClassParams p;
  p.gamma = std::polar(uniform(rng, 0.05, max_gamma), uniform(rng, 0.0, 2.0 * std::numbers::pi));
  p.lambda = uniform(rng, 0.0, 1.0);
  p.B = uniform(rng, -1.0, 0.9);
  p.A = uniform(rng, p.B + 0.05, 1.0);
  if (p.A <= p.B) p.A = 1.0;
  return p;
}

// Draws until classify_case(p, n) lands in the requested case.
template <typename Pred>
ClassParams draw_until(std::mt19937_64& rng, Pred pred, double max_gamma = 3.0) {
  for (;;) {
    auto p = random_params(rng, max_gamma);
    if (pred(p)) return p;
  }
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double max_coeff_diff(const ComplexSeries& a, const ComplexSeries& b, Eigen::Index upto) {
  double d = 0.0;
  for (Eigen::Index k = 0; k <= upto; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

// |a - b| / max(1, |b|) coefficient-wise.
inline double max_rel_coeff_diff(const ComplexSeries& a, const ComplexSeries& b, Eigen::Index upto) {
  double d = 0.0;
  for (Eigen::Index k = 0; k <= upto; ++k) {
    d = std::max(d, std::abs(a[k] - b[k]) / std::max(1.0, std::abs(b[k])));
  }
  return d;
}

}  // namespace testing
