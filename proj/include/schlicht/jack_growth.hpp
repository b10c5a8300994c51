#pragma once

// Grid checks for spirallike and G_b membership, forward construction of
// functions satisfying the quotient-subordination criterion for spirallike
// functions, and growth/second-coefficient bounds for starlike functions of
// order alpha.

#include <complex>
#include <vector>

#include "schlicht/series.hpp"
#include "schlicht/subordination.hpp"

namespace schlicht {

// Spiral angle alpha with |alpha| < pi/2 and its unimodular constant
// A = e^{-2 i alpha}.
struct SpiralParams {
  double alpha = 0.0;

  void validate() const;
  std::complex<double> a_spiral() const { return std::polar(1.0, -2.0 * alpha); }
  // beta with 1/beta = 2(1 - alpha), used by the growth estimates.
  double beta_exp() const { return 1.0 / (2.0 * (1.0 - alpha)); }
};

struct SpiralReport {
  bool member = false;
  double min_re = 0.0;  // min Re(e^{i alpha} z f'/f) over the grid
  long interior_zeros = 0;  // winding number of f/z around the circle
};

// Re(e^{i alpha} z f'(z)/f(z)) > 0 on |z| = r and f/z zero-free inside.
// Throws SingularEvaluation when |f| < 1e-12 at a grid point.
SpiralReport spiral_membership(const ComplexSeries& f, double alpha, double r, int angles);

// min over the grid of Re(z f'/f) - alpha; -inf if f/z has zeros inside.
double starlike_order_margin(const ComplexSeries& f, double alpha, double r, int angles);

struct GbReport {
  bool member = false;
  double max_dev = 0.0;  // max |(1 + z f''/f') / (z f'/f) - 1|
};

GbReport gb_membership(const ComplexSeries& f, double b, double r, int angles);

// min over theta of |(1 + A) e^{i theta} / (1 + A e^{i theta})^2|, A = e^{-2 i alpha}:
// a 1e5-point scan refined by golden-section search.
double min_h2_distance(double alpha);

// p with p(0) = 1 solving z p' = h p^2 for h(0) = 0; k p_k = [z^k](h p^2).
ComplexSeries solve_quotient_equation(const ComplexSeries& h, Eigen::Index order);

// f with z p'/p^2 = (A + 1) omega / (1 + A omega)^2 where p = z f'/f, i.e. an
// instance of the quotient criterion built forward from a Schwarz function.
ComplexSeries spiral_instance(const ComplexSeries& omega, double alpha, Eigen::Index order);

// f with (1 + z f''/f') / (z f'/f) - 1 = b omega, a member of G_b.
ComplexSeries gb_instance(const ComplexSeries& omega, double b, Eigen::Index order);

struct GrowthReport {
  bool ok = false;
  double worst_slack = 0.0;  // min over the grid of |z|/(1-|z|)^{1/beta} - |f(z)|
};

struct SecondCoeffReport {
  bool ok = false;
  double value = 0.0;  // |f''(0)| = 2 |a_2|
  double bound = 0.0;  // 2 / beta
};

inline constexpr double kGrowthTolerance = 1e-9;

// |f(z)| <= |z| / (1 - |z|)^{1/beta}, 1/beta = 2(1 - alpha), 0 <= alpha < 1.
// Membership in S*(alpha) is verified on the same grid first; throws
// PreconditionNotVerified otherwise.
GrowthReport growth_check(const ComplexSeries& f, double alpha, const std::vector<double>& radii,
                          int angles);

// |f''(0)| <= 2 / beta.
SecondCoeffReport second_coeff_check(const ComplexSeries& f, double alpha);

// k_beta(z) = z (1 + z)^{-1/beta}.
ComplexSeries kbeta(double beta, Eigen::Index order);

struct KBetaInfo {
  double starlike_order = 0.0;  // 1 - 1/(2 beta)
  bool not_univalent_expected = false;  // 1/beta > 2
};

KBetaInfo kbeta_starlike_order(double beta);

// Grid points where Re(z f'/f) > alpha and |2 alpha f/(z f') - 1| < 1 disagree,
// 0 < alpha < 1. Points where either side is singular are skipped.
int h_alpha_disagreements(const ComplexSeries& f, double alpha, double r, int angles);

}  // namespace schlicht
