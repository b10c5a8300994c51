#pragma once

// Extremal functions for the coefficient estimates, expanded as truncated
// series, and the check that their coefficients actually reach the bound.

#include <optional>

#include "schlicht/bounds.hpp"
#include "schlicht/class_params.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

// Solution of lambda z f' + (1 - lambda) f = rhs, coefficientwise
// a_k = r_k / (1 + lambda (k - 1)).
ComplexSeries solve_lambda_operator(const ComplexSeries& rhs, double lambda);

// Equality case of the case-I estimate at index n:
//   lambda z f' + (1 - lambda) f = z (1 + B z^{n-1})^{gamma (A-B) / (B (n-1))},
// with the B = 0 limit z exp(gamma A z^{n-1} / (n-1)).
ComplexSeries extremal_case1(const ClassParams& p, int n, Eigen::Index order);

// Equality case of the case-II estimate for every n:
//   lambda z f' + (1 - lambda) f = z (1 + B z)^{gamma (A-B) / B},
// with the B = 0 limit z exp(gamma A z).
ComplexSeries extremal_case2(const ClassParams& p, Eigen::Index order);

// a_n = prod_j (mu + j + 1) / prod_j (mu + j + n) * b_n for a normalized g.
ComplexSeries transfer_cauchy_euler(const ComplexSeries& g, const CauchyEulerParams& ce);

enum class ExtremalKind {
  CaseI,        // extremal_case1 at a chosen index
  CaseII,       // extremal_case2
  KoebeGamma,   // z / (1 - z)^{2 gamma}
  ConvexGamma,  // integral of (1 - t)^{-2 gamma}
  CorollaryFn,  // z (1 - z^{n-1})^{-2 gamma (1 - beta) / (n-1)} for Sc
};

struct ExtremalSpec {
  ExtremalKind which = ExtremalKind::CaseII;
  ClassParams params;
  int index = 2;  // the index n for CaseI / CorollaryFn
  Eigen::Index order = 64;
  std::optional<CauchyEulerParams> transfer;
};

// Builds the requested extremal; for the gamma-only kinds `params.gamma` is used
// and, for CorollaryFn, `params.A` carries 1 - 2 beta.
ComplexSeries generate_extremal(const ExtremalSpec& spec);

// The class parameters an extremal kind is judged against.
ClassParams effective_params(const ExtremalSpec& spec);

struct SharpnessCertificate {
  bool attained = false;
  double gap = 0.0;    // bound - |a_n|
  double bound = 0.0;
  double coefficient_modulus = 0.0;
};

inline constexpr double kSharpnessTolerance = 1e-8;

// attained iff |gap| <= 1e-8 max(1, bound). Uses bound_K when `spec`
// carries a transfer.
SharpnessCertificate certify_sharpness(const ExtremalSpec& spec, int n);
SharpnessCertificate certify_sharpness(const ComplexSeries& f, double bound, int n);

}  // namespace schlicht
