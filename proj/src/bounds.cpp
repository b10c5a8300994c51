#include "schlicht/bounds.hpp"

#include <cmath>
#include <complex>

#include "schlicht/errors.hpp"

namespace schlicht {

std::string_view to_string(Sharpness s) { return s == Sharpness::True ? "true" : "unknown"; }

namespace {

void require_index(int n) {
  if (n < 2) throw ParameterDomainError("coefficient index n must be at least 2");
}

long double modulus(std::complex<double> z) {
  return std::hypot(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
}

// prod_{j=0}^{k-1} |g_j| / (k-1)!
long double folded_product(const ClassParams& p, int k) {
  long double acc = modulus(p.factor(0));
  for (int j = 1; j < k; ++j) acc *= modulus(p.factor(j)) / static_cast<long double>(j);
  return acc;
}

long double lambda_weight(const ClassParams& p, int n) {
  return 1.0L + static_cast<long double>(p.lambda) * (n - 1);
}

}  // namespace

double case_I_value(const ClassParams& p, int n) {
  require_index(n);
  const long double num = modulus(p.gamma) * (static_cast<long double>(p.A) - p.B);
  return static_cast<double>(num / ((n - 1) * lambda_weight(p, n)));
}

double case_II_value(const ClassParams& p, int n) {
  require_index(n);
  long double acc = 1.0L;
  for (int j = 0; j <= n - 2; ++j) acc *= modulus(p.factor(j)) / static_cast<long double>(j + 1);
  return static_cast<double>(acc / lambda_weight(p, n));
}

double case_III_value(const ClassParams& p, int n, int k) {
  require_index(n);
  if (k < 1) throw ParameterDomainError("crossover index must be positive");
  return static_cast<double>(folded_product(p, k) / ((n - 1) * lambda_weight(p, n)));
}

BoundResult bound_S(const ClassParams& p, int n) {
  p.validate();
  const auto cls = classify_case(p, n);
  BoundResult r;
  r.n = n;
  r.case_tag = cls.case_tag;
  r.crossover_k = cls.crossover_k;
  switch (cls.case_tag) {
    case CaseTag::I:
      r.value = case_I_value(p, n);
      r.sharp = Sharpness::True;
      r.formula_id = "S.case_I";
      break;
    case CaseTag::II:
      r.value = case_II_value(p, n);
      r.sharp = Sharpness::True;
      r.formula_id = "S.case_II";
      break;
    case CaseTag::III:
      r.value = case_III_value(p, n, *cls.crossover_k);
      r.sharp = Sharpness::Unknown;
      r.formula_id = "S.case_III";
      break;
  }
  return r;
}

BoundResult bound_K(const ClassParams& p, const CauchyEulerParams& ce, int n) {
  ce.validate();
  auto r = bound_S(p, n);
  r.value *= ce.factor(n);
  r.formula_id = "K" + r.formula_id.substr(1);
  return r;
}

double lemma1_identity_residual(const ClassParams& p, int m) {
  p.validate();
  if (m < 2) throw ParameterDomainError("m must be at least 2");
  if (std::abs(p.factor(m - 2)) < (m - 2) - 1e-12) {
    throw HypothesisViolated("telescoping identity needs |gamma(A-B) - B(m-2)| >= m-2");
  }
  // prod_{j=0}^{k-2} |g_j|^2 / ((k-1)!)^2, updated incrementally in k.
  long double weighted = 1.0L;
  long double lhs = std::norm(std::complex<long double>(p.factor(0)));
  for (int k = 2; k <= m - 1; ++k) {
    const long double g = std::norm(std::complex<long double>(p.factor(k - 2)));
    weighted *= g / (static_cast<long double>(k - 1) * (k - 1));
    const long double km1 = k - 1;
    const long double bracket =
        std::abs(std::norm(std::complex<long double>(p.factor(k - 1))) - km1 * km1);
    lhs += bracket * weighted;
  }
  long double rhs = 1.0L;
  for (int j = 0; j <= m - 2; ++j) {
    rhs *= std::norm(std::complex<long double>(p.factor(j)));
    if (j >= 1) rhs /= static_cast<long double>(j) * j;
  }
  if (rhs == 0.0L) return static_cast<double>(std::abs(lhs));
  return static_cast<double>(std::abs(lhs - rhs) / std::abs(rhs));
}

namespace {

void require_sbeta_domain(double beta, double A, double B, int n) {
  require_index(n);
  if (!(std::abs(beta) < std::acos(-1.0) / 2)) throw ParameterDomainError("need |beta| < pi/2");
  if (!(B >= -1.0 && B < A && A <= 1.0)) throw ParameterDomainError("need -1 <= B < A <= 1");
}

}  // namespace

double bound_sbeta(double beta, double A, double B, int n) {
  require_sbeta_domain(beta, A, B, n);
  const std::complex<double> base = (A - B) * std::polar(1.0, -beta) * std::cos(beta);
  long double acc = 1.0L;
  for (int j = 0; j <= n - 2; ++j) acc *= modulus(base - double(j) * B) / static_cast<long double>(j + 1);
  return static_cast<double>(acc);
}

bool sbeta_side_condition(double beta, double A, double B, int n) {
  require_sbeta_domain(beta, A, B, n);
  const double c = std::cos(beta), s = std::sin(beta);
  const double lead = A - (n - 1) * B;
  return lead * lead * c * c + double(n - 2) * (n - 2) * (B * B * s * s - 1.0) >= -1e-12;
}

std::optional<double> cross_check_sbeta(double beta, double A, double B, int n) {
  require_sbeta_domain(beta, A, B, n);
  SubclassSpec spec;
  spec.kind = Subclass::Sbeta;
  spec.beta = beta;
  spec.A = A;
  spec.B = B;
  const auto red = reduce(spec);
  const auto r = bound_S(red.params, n);
  if (r.case_tag != CaseTag::II) return std::nullopt;
  return std::abs(bound_sbeta(beta, A, B, n) - r.value);
}

BoundResult corollary_bounds(const SubclassSpec& spec, int n) {
  const auto red = reduce(spec);
  if (red.transfer) return bound_K(red.params, *red.transfer, n);
  return bound_S(red.params, n);
}

}  // namespace schlicht
