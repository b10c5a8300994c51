#pragma once

// Sharp and best-known estimates for |a_n| over S(lambda, gamma, A, B) and
// its Cauchy-Euler transfers, with the telescoping identity behind them and
// consistency checks against the tilted class S^beta(A, B).

#include <optional>
#include <string>

#include "schlicht/class_params.hpp"

namespace schlicht {

enum class Sharpness { True, Unknown };

std::string_view to_string(Sharpness s);

struct BoundResult {
  int n = 2;
  double value = 0.0;
  CaseTag case_tag = CaseTag::II;
  std::optional<int> crossover_k;
  Sharpness sharp = Sharpness::True;
  std::string formula_id;
};

// The three closed forms, evaluated unconditionally (no case selection):
//   I:   |gamma|(A-B) / ((n-1)(1+lambda(n-1)))
//   II:  prod_{j=0}^{n-2} |gamma(A-B) - jB| / ((n-1)! (1+lambda(n-1)))
//   III: prod_{j=0}^{k-1} |gamma(A-B) - jB| / ((k-1)! (n-1) (1+lambda(n-1)))
// Products are accumulated in long double with the factorials folded in
// term by term.
double case_I_value(const ClassParams& p, int n);
double case_II_value(const ClassParams& p, int n);
double case_III_value(const ClassParams& p, int n, int k);

BoundResult bound_S(const ClassParams& p, int n);
BoundResult bound_K(const ClassParams& p, const CauchyEulerParams& ce, int n);

// Relative residual |LHS - RHS| / |RHS| of the telescoping identity
//   |g_0|^2 + sum_{k=2}^{m-1} ||g_{k-1}|^2 - (k-1)^2| / ((k-1)!)^2 prod_{j=0}^{k-2} |g_j|^2
//     = prod_{j=0}^{m-2} |g_j|^2 / ((m-2)!)^2,   g_j = gamma(A-B) - jB.
// Throws HypothesisViolated unless |g_{m-2}| >= m - 2.
double lemma1_identity_residual(const ClassParams& p, int m);

// prod_{j=0}^{n-2} |(A-B) e^{-i beta} cos(beta) - jB| / (j+1), the estimate
// for S^beta(A, B).
double bound_sbeta(double beta, double A, double B, int n);

// (A-(n-1)B)^2 cos^2(beta) + (n-2)^2 (B^2 sin^2(beta) - 1) >= 0, the side
// condition under which the S^beta estimate is known to hold.
bool sbeta_side_condition(double beta, double A, double B, int n);

// |bound_sbeta - bound_S(reduce(S^beta))|, defined only when the reduced
// parameters classify as case II at n; std::nullopt otherwise.
std::optional<double> cross_check_sbeta(double beta, double A, double B, int n);

// Bounds for a named subclass via reduce(); transfer classes go through bound_K.
BoundResult corollary_bounds(const SubclassSpec& spec, int n);

}  // namespace schlicht
