#pragma once

// Members of S(lambda, gamma, A, B) built from Schwarz functions, the inverse
// recovery of the Schwarz function from a member, grid membership tests, and
// the seeded randomized search for coefficient-bound violations.

#include <cstdint>
#include <string_view>
#include <vector>

#include "schlicht/bounds.hpp"
#include "schlicht/class_params.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

enum class SchwarzConstruction { PolynomialNormalized, Rotation, Monomial, Recovered, Zero };

std::string_view to_string(SchwarzConstruction c);

struct SchwarzSample {
  ComplexSeries omega;        // omega(0) = 0
  double sup_estimate = 0.0;  // max |omega| over the default circle grid
  double coeff_l1 = 0.0;      // sum |c_j|; <= 1 certifies |omega| < 1 on the disk
  SchwarzConstruction construction = SchwarzConstruction::Zero;
  std::uint64_t seed = 0;
};

inline constexpr double kDefaultMembershipRadius = 0.99;
inline constexpr int kDefaultMembershipAngles = 2048;
inline constexpr double kMembershipTolerance = 1e-6;

// Seed of the `index`-th sample stream derived from a run seed (SplitMix64
// finalizer over seed + (index + 1) * golden gamma).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Random Schwarz function of the requested construction:
//   PolynomialNormalized: z sum_{j<d} c_j z^j with sum |c_j| = rho, rho in (0, 1]
//   Monomial: rho z^d;  Rotation: e^{i theta} z.
SchwarzSample sample_schwarz(std::uint64_t seed, int degree, SchwarzConstruction construction);

// The construction used by the fuzzer: rotation (10%), monomial of random
// degree <= `degree` (20%), normalized polynomial (70%).
SchwarzSample sample_mixed(std::uint64_t seed, int degree);

SchwarzSample make_rotation(double theta);
SchwarzSample make_monomial(double rho, int degree, double theta = 0.0);
SchwarzSample make_zero();
// Wraps an arbitrary series, filling in the grid estimate.
SchwarzSample make_sample(ComplexSeries omega, SchwarzConstruction construction, std::uint64_t seed = 0);

// The normalized f with 1 + (z F'/F - 1)/gamma = (1 + A omega)/(1 + B omega),
// F = lambda z f' + (1 - lambda) f.
ComplexSeries f_from_schwarz(const ComplexSeries& omega, const ClassParams& p, Eigen::Index order);
ComplexSeries f_from_schwarz(const SchwarzSample& omega, const ClassParams& p, Eigen::Index order);

// Inverse of f_from_schwarz; the recovered omega has order f.order() - 1.
SchwarzSample schwarz_from_member(const ComplexSeries& f, const ClassParams& p);

struct MembershipReport {
  bool member = false;
  double margin = 0.0;  // 1 - max |omega| on the grid
  double radius_used = kDefaultMembershipRadius;
  int angles_used = kDefaultMembershipAngles;
};

MembershipReport is_member(const ComplexSeries& f, const ClassParams& p,
                           double radius = kDefaultMembershipRadius,
                           int angles = kDefaultMembershipAngles,
                           double tolerance = kMembershipTolerance);

// RHS - LHS of the coefficient inequality obtained from Parseval's identity:
//   (n-1)^2 (1+lambda(n-1))^2 |a_n|^2
//     <= |gamma|^2 (A-B)^2 + sum_{k=2}^{n-1} (|g_{k-1}|^2 - (k-1)^2) (1+lambda(k-1))^2 |a_k|^2.
// Returned relative to the sum of the absolute values of all terms, so it is
// nonnegative (up to rounding) for every member.
double parseval_slack(const ComplexSeries& f, const ClassParams& p, int n);

struct FuzzConfig {
  int n_max = 10;
  int samples = 1000;
  std::uint64_t seed = 0;
  int degree = 4;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct FuzzEntry {
  int n = 2;
  double bound = 0.0;
  CaseTag case_tag = CaseTag::II;
  Sharpness sharp = Sharpness::True;
  double max_observed = 0.0;
  std::int64_t argmax_sample = -1;
  std::uint64_t argmax_seed = 0;
  int violations = 0;
};

struct FuzzReport {
  ClassParams params;
  FuzzConfig config;
  std::vector<FuzzEntry> per_n;  // n = 2 .. n_max
  int parseval_failures = 0;
  int nonpositive_margins = 0;   // samples with sup_estimate >= 1
  double min_margin = 1.0;
};

inline constexpr double kViolationFactor = 1.0 + 1e-9;
inline constexpr double kParsevalTolerance = 1e-9;

// Deterministic given the config: samples are drawn from per-index streams
// and merged in index order, independent of the thread count.
FuzzReport fuzz_bounds(const ClassParams& p, const FuzzConfig& config);

}  // namespace schlicht
