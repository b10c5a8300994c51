#include "schlicht/class_params.hpp"

#include <cmath>
#include <numbers>

#include "schlicht/errors.hpp"

namespace schlicht {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterDomainError(what);
}

bool finite(std::complex<double> z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void ClassParams::validate() const {
  require(finite(gamma) && std::abs(gamma) > 0.0, "gamma must be a finite nonzero complex number");
  require(std::isfinite(lambda) && lambda >= 0.0 && lambda <= 1.0, "lambda must lie in [0, 1]");
  require(std::isfinite(A) && std::isfinite(B), "A and B must be finite");
  require(B >= -1.0 && B < A && A <= 1.0, "need -1 <= B < A <= 1");
}

ClassParams make_class_params(std::complex<double> gamma, double lambda, double A, double B) {
  ClassParams p{gamma, lambda, A, B};
  p.validate();
  return p;
}

void CauchyEulerParams::validate() const {
  require(m >= 2, "Cauchy-Euler order m must be at least 2");
  require(std::isfinite(mu) && mu > -1.0, "mu must be a real number greater than -1");
}

double CauchyEulerParams::factor(int n) const {
  double f = 1.0;
  for (int j = 0; j < m; ++j) f *= (mu + j + 1.0) / (mu + j + n);
  return f;
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
  }
  return "?";
}

std::vector<double> ak_sequence(const ClassParams& p, int n) {
  std::vector<double> out;
  for (int k = 2; k <= n - 1; ++k) {
    out.push_back(std::abs(p.factor(k - 1)) - double(k - 1));
  }
  return out;
}

CaseClassification classify_case(const ClassParams& p, int n) {
  if (n < 2) throw ParameterDomainError("coefficient index n must be at least 2");
  CaseClassification out;
  out.ak_values = ak_sequence(p, n);
  if (n == 2) {
    out.case_tag = CaseTag::II;
    return out;
  }
  const auto nonneg = [](double a) { return a >= -kAkTieTolerance; };
  const auto& ak = out.ak_values;  // ak[i] holds A_{i+2}
  if (nonneg(ak.back())) {
    out.case_tag = CaseTag::II;
  } else if (!nonneg(ak.front())) {
    out.case_tag = CaseTag::I;
  } else {
    int k = 2;
    while (k + 1 <= n - 1 && nonneg(ak[std::size_t(k + 1 - 2)])) ++k;
    out.case_tag = CaseTag::III;
    out.crossover_k = k;
  }
  return out;
}

std::string_view to_string(Subclass s) {
  switch (s) {
    case Subclass::S: return "S";
    case Subclass::K: return "K";
    case Subclass::StarlikeGamma: return "starlike-gamma";
    case Subclass::ConvexGamma: return "convex-gamma";
    case Subclass::Sc: return "Sc";
    case Subclass::Bclass: return "B";
    case Subclass::M: return "M";
    case Subclass::N: return "N";
    case Subclass::Sbeta: return "Sbeta";
    case Subclass::Janowski: return "janowski";
    case Subclass::StarlikeOrder: return "starlike-order";
    case Subclass::Spiral: return "SP";
  }
  return "?";
}

Subclass parse_subclass(std::string_view name) {
  if (name == "S") return Subclass::S;
  if (name == "K") return Subclass::K;
  if (name == "starlike-gamma" || name == "S*gamma" || name == "Sstar") return Subclass::StarlikeGamma;
  if (name == "convex-gamma" || name == "Cgamma" || name == "C") return Subclass::ConvexGamma;
  if (name == "Sc") return Subclass::Sc;
  if (name == "B") return Subclass::Bclass;
  if (name == "M") return Subclass::M;
  if (name == "N") return Subclass::N;
  if (name == "Sbeta") return Subclass::Sbeta;
  if (name == "janowski" || name == "S*[A,B]") return Subclass::Janowski;
  if (name == "starlike-order" || name == "S*alpha") return Subclass::StarlikeOrder;
  if (name == "SP" || name == "spiral") return Subclass::Spiral;
  throw ParameterDomainError("unknown class name: " + std::string(name));
}

namespace {

// 1 / (1 + i tan t), which equals e^{-i t} cos t.
std::complex<double> tilt(double t) { return 1.0 / std::complex<double>(1.0, std::tan(t)); }

void require_tilt_angle(double t, const char* name) {
  require(std::isfinite(t) && std::abs(t) < std::numbers::pi / 2,
          std::string(name) + " must satisfy |" + name + "| < pi/2");
}

}  // namespace

Reduction reduce(const SubclassSpec& s) {
  Reduction r;
  switch (s.kind) {
    case Subclass::S:
      r.params = ClassParams{s.gamma, s.lambda, s.A, s.B};
      break;
    case Subclass::K:
      r.params = ClassParams{s.gamma, s.lambda, s.A, s.B};
      r.transfer = CauchyEulerParams{s.m, s.mu};
      break;
    case Subclass::StarlikeGamma:
      r.params = ClassParams{s.gamma, 0.0, 1.0, -1.0};
      break;
    case Subclass::ConvexGamma:
      r.params = ClassParams{s.gamma, 1.0, 1.0, -1.0};
      break;
    case Subclass::Sc:
    case Subclass::Bclass:
      require(std::isfinite(s.beta) && s.beta >= 0.0 && s.beta < 1.0, "beta must lie in [0, 1)");
      r.params = ClassParams{s.gamma, s.lambda, 1.0 - 2.0 * s.beta, -1.0};
      if (s.kind == Subclass::Bclass) r.transfer = CauchyEulerParams{2, s.mu};
      break;
    case Subclass::M:
    case Subclass::N:
      require(std::isfinite(s.beta) && s.beta > 1.0, "beta must exceed 1");
      r.params = ClassParams{{1.0 - s.beta, 0.0}, s.kind == Subclass::N ? 1.0 : 0.0, 1.0, -1.0};
      break;
    case Subclass::Sbeta:
      require_tilt_angle(s.beta, "beta");
      r.params = ClassParams{tilt(s.beta), 0.0, s.A, s.B};
      break;
    case Subclass::Janowski:
      r.params = ClassParams{{1.0, 0.0}, 0.0, s.A, s.B};
      break;
    case Subclass::StarlikeOrder:
      require(std::isfinite(s.alpha) && s.alpha >= 0.0 && s.alpha < 1.0, "alpha must lie in [0, 1)");
      r.params = ClassParams{{1.0, 0.0}, 0.0, 1.0 - 2.0 * s.alpha, -1.0};
      break;
    case Subclass::Spiral:
      require_tilt_angle(s.alpha, "alpha");
      r.params = ClassParams{tilt(s.alpha), 0.0, s.A, s.B};
      break;
  }
  r.params.validate();
  if (r.transfer) r.transfer->validate();
  return r;
}

}  // namespace schlicht
