#pragma once

// Parameter tuples for the subordination classes S(lambda, gamma, A, B) and
// the Cauchy-Euler transfer classes K(lambda, gamma, A, B, m, mu), plus the
// sign sequence A_k that decides which coefficient estimate applies.

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schlicht {

// f in S(lambda, gamma, A, B) iff, with F = lambda z f' + (1 - lambda) f,
//   1 + (z F'/F - 1) / gamma  is subordinate to  (1 + A z) / (1 + B z).
struct ClassParams {
  std::complex<double> gamma{1.0, 0.0};
  double lambda = 0.0;
  double A = 1.0;
  double B = -1.0;

  // Throws ParameterDomainError unless gamma != 0, 0 <= lambda <= 1 and
  // -1 <= B < A <= 1.
  void validate() const;

  // gamma (A - B) - j B, the j-th factor of every coefficient product.
  std::complex<double> factor(int j) const { return gamma * (A - B) - double(j) * B; }
};

ClassParams make_class_params(std::complex<double> gamma, double lambda, double A, double B);

// Order-m Cauchy-Euler transfer: a_n = prod_j (mu + j + 1) / prod_j (mu + j + n) * b_n.
struct CauchyEulerParams {
  int m = 2;
  double mu = 0.0;

  void validate() const;

  double factor(int n) const;
};

enum class CaseTag { I, II, III };

std::string_view to_string(CaseTag tag);

struct CaseClassification {
  CaseTag case_tag = CaseTag::II;
  std::optional<int> crossover_k;  // case III only
  std::vector<double> ak_values;   // A_2 .. A_{n-1}
};

// A_k = |gamma (A - B) - B (k - 1)| - (k - 1) for k = 2 .. n-1.
std::vector<double> ak_sequence(const ClassParams& p, int n);

// A value this close to zero counts as nonnegative; at A_k = 0 the competing
// estimates coincide, so the tie-break only affects the reported tag.
inline constexpr double kAkTieTolerance = 1e-12;

CaseClassification classify_case(const ClassParams& p, int n);

// Named subclasses that reduce to S(lambda, gamma, A, B), optionally followed
// by a Cauchy-Euler transfer.
enum class Subclass {
  S,              // S(lambda, gamma, A, B) itself
  K,              // K(lambda, gamma, A, B, m, mu)
  StarlikeGamma,  // S*(gamma): starlike of complex order
  ConvexGamma,    // C(gamma): convex of complex order
  Sc,             // Sc(gamma, lambda, beta)
  Bclass,         // B(gamma, lambda, beta, mu), second-order transfer of Sc
  M,              // M(beta), beta > 1
  N,              // N(beta), beta > 1
  Sbeta,          // S^beta(A, B), |beta| < pi/2
  Janowski,       // S*[A, B]
  StarlikeOrder,  // S*(alpha), 0 <= alpha < 1
  Spiral,         // SP(alpha) through S^alpha(A, B), default A = 1, B = -1
};

std::string_view to_string(Subclass s);
// Accepts the canonical names from to_string plus a few aliases; throws
// ParameterDomainError for unknown names.
Subclass parse_subclass(std::string_view name);

// Union of all subclass parameters; each subclass reads the fields it needs.
struct SubclassSpec {
  Subclass kind = Subclass::S;
  std::complex<double> gamma{1.0, 0.0};
  double lambda = 0.0;
  double A = 1.0;
  double B = -1.0;
  double beta = 0.0;
  double alpha = 0.0;
  double mu = 0.0;
  int m = 2;
};

struct Reduction {
  ClassParams params;
  std::optional<CauchyEulerParams> transfer;
};

Reduction reduce(const SubclassSpec& spec);

}  // namespace schlicht
