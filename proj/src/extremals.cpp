#include "schlicht/extremals.hpp"

#include <algorithm>
#include <cmath>

namespace schlicht {

using cd = std::complex<double>;

ComplexSeries solve_lambda_operator(const ComplexSeries& rhs, double lambda) {
  ComplexSeries::Coeffs c = rhs.coeffs();
  for (Eigen::Index k = 1; k <= rhs.order(); ++k) c(k) /= 1.0 + lambda * double(k - 1);
  return ComplexSeries(std::move(c));
}

ComplexSeries extremal_case1(const ClassParams& p, int n, Eigen::Index order) {
  p.validate();
  if (n < 2) throw ParameterDomainError("extremal index n must be at least 2");
  if (order < n) throw ParameterDomainError("truncation order must be at least n");
  // Inner factor of order `order - 1`; multiplying by z restores `order`.
  const auto inner_order = order - 1;
  ComplexSeries inner;
  if (p.B == 0.0) {
    const auto w = ComplexSeries::monomial(n - 1, p.gamma * p.A / double(n - 1), inner_order);
    inner = exp0(w);
  } else {
    const auto base = add_constant(ComplexSeries::monomial(n - 1, cd(p.B), inner_order), cd(1.0));
    inner = powc(base, p.gamma * (p.A - p.B) / (p.B * double(n - 1)));
  }
  return solve_lambda_operator(times_z(inner), p.lambda);
}

ComplexSeries extremal_case2(const ClassParams& p, Eigen::Index order) {
  p.validate();
  if (order < 1) throw ParameterDomainError("truncation order must be at least 1");
  const auto inner_order = order - 1;
  ComplexSeries inner;
  if (p.B == 0.0) {
    inner = exp0(ComplexSeries::monomial(1, p.gamma * p.A, inner_order));
  } else {
    const auto base = add_constant(ComplexSeries::monomial(1, cd(p.B), inner_order), cd(1.0));
    inner = powc(base, p.gamma * (p.A - p.B) / p.B);
  }
  return solve_lambda_operator(times_z(inner), p.lambda);
}

ComplexSeries transfer_cauchy_euler(const ComplexSeries& g, const CauchyEulerParams& ce) {
  ce.validate();
  if (g.order() < 1 || std::abs(g[0]) > 1e-12 || std::abs(g[1] - 1.0) > 1e-12) {
    throw ParameterDomainError("Cauchy-Euler transfer expects a normalized series g(0)=0, g'(0)=1");
  }
  ComplexSeries::Coeffs c = ComplexSeries::Coeffs::Zero(g.order() + 1);
  for (Eigen::Index k = 1; k <= g.order(); ++k) c(k) = ce.factor(int(k)) * g[k];
  return ComplexSeries(std::move(c));
}

ClassParams effective_params(const ExtremalSpec& spec) {
  const auto& p = spec.params;
  switch (spec.which) {
    case ExtremalKind::CaseI:
    case ExtremalKind::CaseII:
      return p;
    case ExtremalKind::KoebeGamma:
      return ClassParams{p.gamma, 0.0, 1.0, -1.0};
    case ExtremalKind::ConvexGamma:
      return ClassParams{p.gamma, 1.0, 1.0, -1.0};
    case ExtremalKind::CorollaryFn:
      return ClassParams{p.gamma, p.lambda, p.A, -1.0};
  }
  return p;
}

ComplexSeries generate_extremal(const ExtremalSpec& spec) {
  const auto p = effective_params(spec);
  ComplexSeries f;
  switch (spec.which) {
    case ExtremalKind::CaseI:
    case ExtremalKind::CorollaryFn:
      f = extremal_case1(p, spec.index, spec.order);
      break;
    case ExtremalKind::CaseII:
    case ExtremalKind::KoebeGamma:
    case ExtremalKind::ConvexGamma:
      f = extremal_case2(p, spec.order);
      break;
  }
  if (spec.transfer) f = transfer_cauchy_euler(f, *spec.transfer);
  return f;
}

SharpnessCertificate certify_sharpness(const ComplexSeries& f, double bound, int n) {
  SharpnessCertificate c;
  c.bound = bound;
  c.coefficient_modulus = std::abs(f[n]);
  c.gap = bound - c.coefficient_modulus;
  c.attained = std::abs(c.gap) <= kSharpnessTolerance * std::max(1.0, bound);
  return c;
}

SharpnessCertificate certify_sharpness(const ExtremalSpec& spec, int n) {
  if (spec.order < n) throw ParameterDomainError("extremal truncated below the certified index");
  const auto p = effective_params(spec);
  const double bound = spec.transfer ? bound_K(p, *spec.transfer, n).value : bound_S(p, n).value;
  return certify_sharpness(generate_extremal(spec), bound, n);
}

}  // namespace schlicht
