#include "schlicht/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include "schlicht/extremals.hpp"

namespace schlicht {

using cd = std::complex<double>;

std::string_view to_string(SchwarzConstruction c) {
  switch (c) {
    case SchwarzConstruction::PolynomialNormalized: return "polynomial_normalized";
    case SchwarzConstruction::Rotation: return "rotation";
    case SchwarzConstruction::Monomial: return "monomial";
    case SchwarzConstruction::Recovered: return "recovered";
    case SchwarzConstruction::Zero: return "zero";
  }
  return "?";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Uniform in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

double sup_on_grid(const ComplexSeries& omega) {
  double sup = 0.0;
  for (const auto& v : eval_on_circle(omega, kDefaultMembershipRadius, kDefaultMembershipAngles)) {
    sup = std::max(sup, std::abs(v));
  }
  return sup;
}

double l1_norm(const ComplexSeries& s) { return s.coeffs().cwiseAbs().sum(); }

}  // namespace

SchwarzSample make_sample(ComplexSeries omega, SchwarzConstruction construction, std::uint64_t seed) {
  SchwarzSample s;
  s.sup_estimate = sup_on_grid(omega);
  s.coeff_l1 = l1_norm(omega);
  s.omega = std::move(omega);
  s.construction = construction;
  s.seed = seed;
  return s;
}

SchwarzSample make_rotation(double theta) {
  return make_sample(ComplexSeries::monomial(1, std::polar(1.0, theta), 1), SchwarzConstruction::Rotation);
}

SchwarzSample make_monomial(double rho, int degree, double theta) {
  if (degree < 1) throw ParameterDomainError("Schwarz monomial degree must be at least 1");
  if (!(rho >= 0.0 && rho <= 1.0)) throw ParameterDomainError("Schwarz monomial needs 0 <= rho <= 1");
  return make_sample(ComplexSeries::monomial(degree, std::polar(rho, theta), degree),
                     SchwarzConstruction::Monomial);
}

SchwarzSample make_zero() { return make_sample(ComplexSeries::zero(1), SchwarzConstruction::Zero); }

SchwarzSample sample_schwarz(std::uint64_t seed, int degree, SchwarzConstruction construction) {
  if (degree < 1) throw ParameterDomainError("Schwarz sample degree must be at least 1");
  std::mt19937_64 rng(seed);
  const double two_pi = 2.0 * std::numbers::pi;
  SchwarzSample s;
  switch (construction) {
    case SchwarzConstruction::Rotation:
      s = make_rotation(two_pi * unit(rng));
      break;
    case SchwarzConstruction::Monomial: {
      const double rho = 1.0 - unit(rng);
      s = make_monomial(rho, degree);
      break;
    }
    case SchwarzConstruction::PolynomialNormalized: {
      const double rho = 1.0 - unit(rng);
      ComplexSeries::Coeffs c = ComplexSeries::Coeffs::Zero(degree + 1);
      for (int j = 1; j <= degree; ++j) {
        const double re = 2.0 * unit(rng) - 1.0;
        const double im = 2.0 * unit(rng) - 1.0;
        c(j) = cd(re, im);
      }
      const double l1 = c.cwiseAbs().sum();
      if (l1 > 0.0) c *= rho / l1;
      s = make_sample(ComplexSeries(std::move(c)), construction);
      break;
    }
    case SchwarzConstruction::Zero:
      s = make_zero();
      break;
    case SchwarzConstruction::Recovered:
      throw ParameterDomainError("recovered Schwarz functions cannot be sampled");
  }
  s.seed = seed;
  return s;
}

SchwarzSample sample_mixed(std::uint64_t seed, int degree) {
  if (degree < 1) throw ParameterDomainError("Schwarz sample degree must be at least 1");
  std::mt19937_64 rng(seed);
  const double u = unit(rng);
  const std::uint64_t sub = rng();
  SchwarzSample s;
  if (u < 0.1) {
    s = sample_schwarz(sub, degree, SchwarzConstruction::Rotation);
  } else if (u < 0.3) {
    const int d = 1 + int(rng() % std::uint64_t(degree));
    s = sample_schwarz(sub, d, SchwarzConstruction::Monomial);
  } else {
    s = sample_schwarz(sub, degree, SchwarzConstruction::PolynomialNormalized);
  }
  s.seed = seed;
  return s;
}

ComplexSeries f_from_schwarz(const ComplexSeries& omega, const ClassParams& p, Eigen::Index order) {
  p.validate();
  if (std::abs(omega[0]) != 0.0) throw NonvanishingInnerConstant("Schwarz function must vanish at 0");
  const auto w = omega.resized(order);
  // Q = 1 + gamma (A - B) omega / (1 + B omega)
  const auto denom = add_constant(scale(w, cd(p.B)), cd(1.0));
  const auto q = add_constant(scale(div(w, denom), p.gamma * (p.A - p.B)), cd(1.0));
  return solve_lambda_operator(from_log_derivative(q, order), p.lambda);
}

ComplexSeries f_from_schwarz(const SchwarzSample& omega, const ClassParams& p, Eigen::Index order) {
  return f_from_schwarz(omega.omega, p, order);
}

SchwarzSample schwarz_from_member(const ComplexSeries& f, const ClassParams& p) {
  p.validate();
  if (f.order() < 2) throw ParameterDomainError("member series must have order at least 2");
  if (std::abs(f[0]) > 1e-12 || std::abs(f[1] - 1.0) > 1e-12) {
    throw ParameterDomainError("member series must be normalized: f(0) = 0, f'(0) = 1");
  }
  // The division by U below loses a few digits when f has large
  // coefficients, so the inversion runs in extended precision.
  using LSeries = Series<long double>;
  using lcd = std::complex<long double>;
  // F = lambda z f' + (1 - lambda) f, U = F / z, z F'/F - 1 = z U'/U.
  LSeries::Coeffs fc(f.order() + 1);
  for (Eigen::Index k = 0; k <= f.order(); ++k) {
    fc(k) = lcd(f[k]) * (1.0L + static_cast<long double>(p.lambda) * (k - 1));
  }
  const auto u = over_z(LSeries(std::move(fc)));
  const auto log_deriv = div(times_z(derivative(u)), u);  // order of u
  // P = 1 + (z F'/F - 1) / gamma; omega = (P - 1) / (A - B P)
  const auto pm1 = scale(log_deriv, 1.0L / lcd(p.gamma));
  const long double A = p.A, B = p.B;
  const auto denom = add_constant(scale(pm1, lcd(-B)), lcd(A - B));
  if (std::abs(denom[0]) <= 1e-14L) throw InversionSingular("A - B P vanishes at the origin");
  const auto omega = div(pm1, denom);
  ComplexSeries::Coeffs oc(omega.order() + 1);
  for (Eigen::Index k = 0; k <= omega.order(); ++k) oc(k) = cd(omega[k]);
  // The constant term is zero analytically; clear rounding residue.
  oc(0) = 0.0;
  return make_sample(ComplexSeries(std::move(oc)), SchwarzConstruction::Recovered);
}

MembershipReport is_member(const ComplexSeries& f, const ClassParams& p, double radius, int angles,
                           double tolerance) {
  const auto omega = schwarz_from_member(f, p).omega;
  double sup = 0.0;
  for (const auto& v : eval_on_circle(omega, radius, angles)) sup = std::max(sup, std::abs(v));
  MembershipReport r;
  r.margin = 1.0 - sup;
  r.member = r.margin > -tolerance;
  r.radius_used = radius;
  r.angles_used = angles;
  return r;
}

double parseval_slack(const ComplexSeries& f, const ClassParams& p, int n) {
  if (n < 2 || n > f.order()) throw ParameterDomainError("Parseval check index out of range");
  const auto weight = [&](int k) { return 1.0 + p.lambda * double(k - 1); };
  const double lhs = std::pow(double(n - 1) * weight(n) * std::abs(f[n]), 2);
  double rhs = std::norm(p.factor(0));
  double scale = lhs + rhs;
  for (int k = 2; k <= n - 1; ++k) {
    const double term =
        (std::norm(p.factor(k - 1)) - double(k - 1) * (k - 1)) * std::norm(weight(k) * f[k]);
    rhs += term;
    scale += std::abs(term);
  }
  return (rhs - lhs) / scale;
}

namespace {

struct Partial {
  std::vector<double> max_observed;
  std::vector<std::int64_t> argmax;
  std::vector<std::uint64_t> argmax_seed;
  std::vector<int> violations;
  int parseval_failures = 0;
  int nonpositive_margins = 0;
  double min_margin = 1.0;

  explicit Partial(std::size_t count)
      : max_observed(count, -1.0), argmax(count, -1), argmax_seed(count, 0), violations(count, 0) {}

  // Ties keep the earlier sample, so merging blocks in index order gives a
  // result independent of how samples were split.
  void merge(const Partial& o) {
    for (std::size_t i = 0; i < max_observed.size(); ++i) {
      if (o.max_observed[i] > max_observed[i]) {
        max_observed[i] = o.max_observed[i];
        argmax[i] = o.argmax[i];
        argmax_seed[i] = o.argmax_seed[i];
      }
      violations[i] += o.violations[i];
    }
    parseval_failures += o.parseval_failures;
    nonpositive_margins += o.nonpositive_margins;
    min_margin = std::min(min_margin, o.min_margin);
  }
};

}  // namespace

FuzzReport fuzz_bounds(const ClassParams& p, const FuzzConfig& config) {
  p.validate();
  if (config.samples < 1) throw ParameterDomainError("fuzzing needs at least one sample");
  if (config.n_max < 2) throw ParameterDomainError("n_max must be at least 2");
  if (config.degree < 1) throw ParameterDomainError("Schwarz degree must be at least 1");

  FuzzReport report;
  report.params = p;
  report.config = config;
  for (int n = 2; n <= config.n_max; ++n) {
    const auto b = bound_S(p, n);
    FuzzEntry e;
    e.n = n;
    e.bound = b.value;
    e.case_tag = b.case_tag;
    e.sharp = b.sharp;
    report.per_n.push_back(e);
  }
  const std::size_t count = report.per_n.size();

  const auto run_block = [&](std::int64_t begin, std::int64_t end) {
    Partial part(count);
    for (std::int64_t i = begin; i < end; ++i) {
      const auto seed = derive_seed(config.seed, std::uint64_t(i));
      const auto sample = sample_mixed(seed, config.degree);
      const double margin = 1.0 - sample.sup_estimate;
      part.min_margin = std::min(part.min_margin, margin);
      if (margin <= 0.0) ++part.nonpositive_margins;
      const auto f = f_from_schwarz(sample, p, config.n_max);
      for (std::size_t idx = 0; idx < count; ++idx) {
        const int n = int(idx) + 2;
        const double an = std::abs(f[n]);
        if (an > part.max_observed[idx]) {
          part.max_observed[idx] = an;
          part.argmax[idx] = i;
          part.argmax_seed[idx] = seed;
        }
        if (an > report.per_n[idx].bound * kViolationFactor) ++part.violations[idx];
        if (parseval_slack(f, p, n) < -kParsevalTolerance) ++part.parseval_failures;
      }
    }
    return part;
  };

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, unsigned(config.samples));
  std::vector<Partial> parts(threads, Partial(count));
  const std::int64_t total = config.samples;
  const auto block_begin = [&](unsigned t) { return total * std::int64_t(t) / std::int64_t(threads); };
  if (threads == 1) {
    parts[0] = run_block(0, total);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          parts[t] = run_block(block_begin(t), block_begin(t + 1));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  Partial merged(count);
  for (const auto& part : parts) merged.merge(part);

  for (std::size_t idx = 0; idx < count; ++idx) {
    auto& e = report.per_n[idx];
    e.max_observed = merged.max_observed[idx];
    e.argmax_sample = merged.argmax[idx];
    e.argmax_seed = merged.argmax_seed[idx];
    e.violations = merged.violations[idx];
  }
  report.parseval_failures = merged.parseval_failures;
  report.nonpositive_margins = merged.nonpositive_margins;
  report.min_margin = merged.min_margin;
  return report;
}

}  // namespace schlicht
