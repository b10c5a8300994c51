#include "schlicht/jack_growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace schlicht {

using cd = std::complex<double>;

void SpiralParams::validate() const {
  if (!(std::isfinite(alpha) && std::abs(alpha) < std::numbers::pi / 2)) {
    throw ParameterDomainError("spiral angle must satisfy |alpha| < pi/2");
  }
}

namespace {

struct PointValues {
  cd z, f, df, d2f;
};

// f, f', f'' on the circle |z| = r.
std::vector<PointValues> sample_derivatives(const ComplexSeries& f, double r, int angles,
                                            bool need_second) {
  if (!(r > 0.0 && r < 1.0)) throw RadiusOutOfRange("grid radius must lie in (0, 1)");
  if (angles <= 0) throw RadiusOutOfRange("need a positive number of angles");
  const auto df = derivative(f);
  const auto d2f = need_second ? derivative(df) : ComplexSeries::zero(0);
  std::vector<PointValues> out;
  out.reserve(std::size_t(angles));
  const double step = 2.0 * std::numbers::pi / angles;
  for (int j = 0; j < angles; ++j) {
    const cd z = std::polar(r, step * j);
    out.push_back({z, evaluate(f, z), evaluate(df, z), need_second ? evaluate(d2f, z) : cd(0)});
  }
  return out;
}

cd log_derivative(const PointValues& v) {
  if (std::abs(v.f) < 1e-12) throw SingularEvaluation("f vanishes at a grid point");
  return v.z * v.df / v.f;
}

// Zeros of f/z inside |z| < r, by the argument principle. The pointwise test
// alone misses them: z + 3z^2 has Re(z f'/f) > 0 on |z| = 0.9 yet vanishes at -1/3.
long interior_zeros(const std::vector<PointValues>& pts) {
  double turn = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const auto& a = pts[j];
    const auto& b = pts[(j + 1) % pts.size()];
    turn += std::arg((b.f / b.z) / (a.f / a.z));
  }
  return std::lround(turn / (2.0 * std::numbers::pi));
}

}  // namespace

SpiralReport spiral_membership(const ComplexSeries& f, double alpha, double r, int angles) {
  SpiralParams{alpha}.validate();
  const cd rot = std::polar(1.0, alpha);
  double min_re = std::numeric_limits<double>::infinity();
  const auto pts = sample_derivatives(f, r, angles, false);
  for (const auto& v : pts) {
    min_re = std::min(min_re, (rot * log_derivative(v)).real());
  }
  const long zeros = interior_zeros(pts);
  return {min_re > 0.0 && zeros == 0, min_re, zeros};
}

double starlike_order_margin(const ComplexSeries& f, double alpha, double r, int angles) {
  double min_re = std::numeric_limits<double>::infinity();
  const auto pts = sample_derivatives(f, r, angles, false);
  for (const auto& v : pts) {
    min_re = std::min(min_re, log_derivative(v).real());
  }
  if (interior_zeros(pts) != 0) return -std::numeric_limits<double>::infinity();
  return min_re - alpha;
}

GbReport gb_membership(const ComplexSeries& f, double b, double r, int angles) {
  if (!(b > 0.0 && b <= 1.0)) throw ParameterDomainError("G_b needs 0 < b <= 1");
  double max_dev = 0.0;
  for (const auto& v : sample_derivatives(f, r, angles, true)) {
    if (std::abs(v.df) < 1e-12) throw SingularEvaluation("f' vanishes at a grid point");
    const cd convexity = 1.0 + v.z * v.d2f / v.df;
    const cd starlikeness = log_derivative(v);
    max_dev = std::max(max_dev, std::abs(convexity / starlikeness - 1.0));
  }
  return {max_dev <= b, max_dev};
}

double min_h2_distance(double alpha) {
  SpiralParams{alpha}.validate();
  const cd a = std::polar(1.0, -2.0 * alpha);
  const auto distance = [&](double t) {
    const cd w = std::polar(1.0, t);
    return std::abs((1.0 + a) * w / ((1.0 + a * w) * (1.0 + a * w)));
  };
  constexpr int kScan = 100000;
  const double step = 2.0 * std::numbers::pi / kScan;
  int best = 0;
  double best_val = distance(0.0);
  for (int j = 1; j < kScan; ++j) {
    const double v = distance(step * j);
    if (v < best_val) {
      best_val = v;
      best = j;
    }
  }
  // Golden-section refinement on the bracketing cell pair.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = step * (best - 1), hi = step * (best + 1);
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = distance(x1), f2 = distance(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = distance(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = distance(x2);
    }
  }
  return std::min({best_val, f1, f2});
}

ComplexSeries solve_quotient_equation(const ComplexSeries& h, Eigen::Index order) {
  if (std::abs(h[0]) > 1e-14) throw NonvanishingInnerConstant("quotient equation needs h(0) = 0");
  order = std::min(order, h.order());
  ComplexSeries::Coeffs p = ComplexSeries::Coeffs::Zero(order + 1);
  ComplexSeries::Coeffs sq = ComplexSeries::Coeffs::Zero(order + 1);  // p^2
  p(0) = 1.0;
  sq(0) = 1.0;
  for (Eigen::Index k = 1; k <= order; ++k) {
    cd acc(0);
    for (Eigen::Index j = 1; j <= k; ++j) acc += h[j] * sq(k - j);
    p(k) = acc / double(k);
    cd s(0);
    for (Eigen::Index j = 0; j <= k; ++j) s += p(j) * p(k - j);
    sq(k) = s;
  }
  return ComplexSeries(std::move(p));
}

ComplexSeries spiral_instance(const ComplexSeries& omega, double alpha, Eigen::Index order) {
  SpiralParams sp{alpha};
  sp.validate();
  const cd a = sp.a_spiral();
  const auto w = omega.resized(order);
  const auto base = add_constant(scale(w, a), cd(1.0));  // 1 + A omega
  const auto h = div(scale(w, a + 1.0), mul(base, base));
  return from_log_derivative(solve_quotient_equation(h, order), order);
}

ComplexSeries gb_instance(const ComplexSeries& omega, double b, Eigen::Index order) {
  if (!(b > 0.0 && b <= 1.0)) throw ParameterDomainError("G_b needs 0 < b <= 1");
  const auto h = scale(omega.resized(order), cd(b));
  return from_log_derivative(solve_quotient_equation(h, order), order);
}

GrowthReport growth_check(const ComplexSeries& f, double alpha, const std::vector<double>& radii,
                          int angles) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterDomainError("growth estimate needs 0 <= alpha < 1");
  const double exponent = 2.0 * (1.0 - alpha);  // 1/beta
  GrowthReport out;
  out.worst_slack = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    if (!(starlike_order_margin(f, alpha, r, angles) > 0.0)) {
      throw PreconditionNotVerified("f is not starlike of the requested order on the grid");
    }
    const double bound = r / std::pow(1.0 - r, exponent);
    for (const auto& v : eval_on_circle(f, r, angles)) {
      out.worst_slack = std::min(out.worst_slack, bound - std::abs(v));
    }
  }
  out.ok = out.worst_slack >= -kGrowthTolerance;
  return out;
}

SecondCoeffReport second_coeff_check(const ComplexSeries& f, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterDomainError("growth estimate needs 0 <= alpha < 1");
  SecondCoeffReport out;
  out.value = 2.0 * std::abs(f[2]);
  out.bound = 4.0 * (1.0 - alpha);
  out.ok = out.value <= out.bound + kGrowthTolerance;
  return out;
}

ComplexSeries kbeta(double beta, Eigen::Index order) {
  if (!(beta > 0.0)) throw ParameterDomainError("k_beta needs beta > 0");
  if (order < 1) throw ParameterDomainError("truncation order must be at least 1");
  const auto one_plus_z = add_constant(ComplexSeries::identity(order - 1), cd(1.0));
  return times_z(powc(one_plus_z, cd(-1.0 / beta)));
}

KBetaInfo kbeta_starlike_order(double beta) {
  if (!(beta > 0.0)) throw ParameterDomainError("k_beta needs beta > 0");
  return {1.0 - 1.0 / (2.0 * beta), 1.0 / beta > 2.0};
}

int h_alpha_disagreements(const ComplexSeries& f, double alpha, double r, int angles) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterDomainError("H(alpha) needs 0 < alpha < 1");
  int count = 0;
  for (const auto& v : sample_derivatives(f, r, angles, false)) {
    if (std::abs(v.f) < 1e-12 || std::abs(v.z * v.df) < 1e-12) continue;
    const cd p = v.z * v.df / v.f;
    const double re_gap = p.real() - alpha;
    const double ball_gap = 1.0 - std::abs(2.0 * alpha * v.f / (v.z * v.df) - 1.0);
    if (std::abs(re_gap) < 1e-12 || std::abs(ball_gap) < 1e-12) continue;
    if ((re_gap > 0.0) != (ball_gap > 0.0)) ++count;
  }
  return count;
}

}  // namespace schlicht
