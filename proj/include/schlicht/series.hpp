#pragma once

// Truncated power series with complex coefficients.
//
// A Series<Real> of order N stores c_0..c_N, the Taylor coefficients of z^0..z^N.
// Binary operations truncate to the smaller operand order, so no result ever
// depends on coefficients that were not supplied.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "schlicht/errors.hpp"

namespace schlicht {

template <typename Real>
class Series {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Index = Eigen::Index;

  Series() : c_(Coeffs::Zero(1)) {}

  explicit Series(Coeffs c) : c_(std::move(c)) {
    if (c_.size() == 0) c_ = Coeffs::Zero(1);
  }

  Series(std::initializer_list<Scalar> c) : c_(Coeffs::Zero(std::max<Index>(1, c.size()))) {
    Index k = 0;
    for (const auto& v : c) c_(k++) = v;
  }

  static Series zero(Index order) { return Series(Coeffs::Zero(order + 1)); }

  static Series constant(Scalar value, Index order) {
    Coeffs c = Coeffs::Zero(order + 1);
    c(0) = value;
    return Series(std::move(c));
  }

  // value * z^power, truncated to `order`.
  static Series monomial(Index power, Scalar value, Index order) {
    Coeffs c = Coeffs::Zero(order + 1);
    if (power <= order) c(power) = value;
    return Series(std::move(c));
  }

  // The identity map z.
  static Series identity(Index order) { return monomial(1, Scalar(1), order); }

  Index order() const { return c_.size() - 1; }
  const Coeffs& coeffs() const { return c_; }

  // Coefficient of z^k; zero past the truncation order.
  Scalar operator[](Index k) const { return k <= order() ? c_(k) : Scalar(0); }

  // Cut down to `order`, or zero-extend when `order` exceeds the current one.
  Series resized(Index new_order) const {
    Coeffs c = Coeffs::Zero(new_order + 1);
    const Index n = std::min(new_order, order()) + 1;
    c.head(n) = c_.head(n);
    return Series(std::move(c));
  }

  Real max_abs() const { return c_.cwiseAbs().maxCoeff(); }

 private:
  Coeffs c_;
};

using ComplexSeries = Series<double>;

namespace detail {

template <typename Real>
constexpr Real unit_tolerance() {
  return Real(1e-14);
}

template <typename Real>
Eigen::Index common_order(const Series<Real>& s, const Series<Real>& t) {
  return std::min(s.order(), t.order());
}

}  // namespace detail

template <typename Real>
Series<Real> add(const Series<Real>& s, const Series<Real>& t) {
  const auto n = detail::common_order(s, t) + 1;
  return Series<Real>(s.coeffs().head(n) + t.coeffs().head(n));
}

template <typename Real>
Series<Real> sub(const Series<Real>& s, const Series<Real>& t) {
  const auto n = detail::common_order(s, t) + 1;
  return Series<Real>(s.coeffs().head(n) - t.coeffs().head(n));
}

template <typename Real>
Series<Real> scale(const Series<Real>& s, std::complex<Real> a) {
  return Series<Real>(s.coeffs() * a);
}

template <typename Real>
Series<Real> mul(const Series<Real>& s, const Series<Real>& t) {
  using Coeffs = typename Series<Real>::Coeffs;
  const auto order = detail::common_order(s, t);
  Coeffs c(order + 1);
  for (Eigen::Index k = 0; k <= order; ++k) {
    c(k) = (s.coeffs().head(k + 1).array() * t.coeffs().head(k + 1).reverse().array()).sum();
  }
  return Series<Real>(std::move(c));
}

template <typename Real>
Series<Real> div(const Series<Real>& s, const Series<Real>& t) {
  using Coeffs = typename Series<Real>::Coeffs;
  const auto t0 = t[0];
  if (std::abs(t0) <= detail::unit_tolerance<Real>()) {
    throw DivisionByNonUnit("series division: divisor has vanishing constant term");
  }
  const auto order = detail::common_order(s, t);
  Coeffs q(order + 1);
  for (Eigen::Index k = 0; k <= order; ++k) {
    auto acc = s[k];
    if (k > 0) {
      acc -= (q.head(k).array() * t.coeffs().segment(1, k).reverse().array()).sum();
    }
    q(k) = acc / t0;
  }
  return Series<Real>(std::move(q));
}

template <typename Real>
Series<Real> operator+(const Series<Real>& s, const Series<Real>& t) { return add(s, t); }
template <typename Real>
Series<Real> operator-(const Series<Real>& s, const Series<Real>& t) { return sub(s, t); }
template <typename Real>
Series<Real> operator*(const Series<Real>& s, const Series<Real>& t) { return mul(s, t); }
template <typename Real>
Series<Real> operator/(const Series<Real>& s, const Series<Real>& t) { return div(s, t); }
template <typename Real>
Series<Real> operator*(std::complex<Real> a, const Series<Real>& s) { return scale(s, a); }
template <typename Real>
Series<Real> operator-(const Series<Real>& s) { return scale(s, std::complex<Real>(-1)); }

// s + a, adding to the constant term only.
template <typename Real>
Series<Real> add_constant(const Series<Real>& s, std::complex<Real> a) {
  auto c = s.coeffs();
  c(0) += a;
  return Series<Real>(std::move(c));
}

// outer(inner(z)) by Horner's scheme in the series ring.
template <typename Real>
Series<Real> compose(const Series<Real>& outer, const Series<Real>& inner) {
  if (std::abs(inner[0]) != Real(0)) {
    throw NonvanishingInnerConstant("series composition: inner series must vanish at the origin");
  }
  const auto order = detail::common_order(outer, inner);
  const auto in = inner.resized(order);
  auto acc = Series<Real>::constant(outer[order], order);
  for (auto k = order - 1; k >= 0; --k) {
    acc = add_constant(mul(acc, in), outer[k]);
  }
  return acc;
}

template <typename Real>
Series<Real> derivative(const Series<Real>& s) {
  using Coeffs = typename Series<Real>::Coeffs;
  if (s.order() == 0) return Series<Real>::zero(0);
  Coeffs c(s.order());
  for (Eigen::Index k = 1; k <= s.order(); ++k) c(k - 1) = Real(k) * s[k];
  return Series<Real>(std::move(c));
}

// Antiderivative vanishing at 0; the order grows by one so nothing is lost.
template <typename Real>
Series<Real> integrate(const Series<Real>& s) {
  using Coeffs = typename Series<Real>::Coeffs;
  Coeffs c = Coeffs::Zero(s.order() + 2);
  for (Eigen::Index k = 0; k <= s.order(); ++k) c(k + 1) = s[k] / Real(k + 1);
  return Series<Real>(std::move(c));
}

// z * s, exact (order grows by one).
template <typename Real>
Series<Real> times_z(const Series<Real>& s) {
  using Coeffs = typename Series<Real>::Coeffs;
  Coeffs c = Coeffs::Zero(s.order() + 2);
  c.tail(s.order() + 1) = s.coeffs();
  return Series<Real>(std::move(c));
}

// s / z for s with s(0) = 0; the constant term is dropped.
template <typename Real>
Series<Real> over_z(const Series<Real>& s) {
  if (s.order() == 0) return Series<Real>::zero(0);
  return Series<Real>(typename Series<Real>::Coeffs(s.coeffs().tail(s.order())));
}

// Principal logarithm of a series with constant term 1.
template <typename Real>
Series<Real> log1(const Series<Real>& s) {
  using Coeffs = typename Series<Real>::Coeffs;
  if (std::abs(s[0] - Real(1)) > Real(1e-12)) {
    throw BranchPointAtOrigin("log1: constant term must equal 1");
  }
  const auto order = s.order();
  Coeffs l = Coeffs::Zero(order + 1);
  // k l_k = k s_k - sum_{j=1}^{k-1} j l_j s_{k-j}
  for (Eigen::Index k = 1; k <= order; ++k) {
    std::complex<Real> acc = Real(k) * s[k];
    for (Eigen::Index j = 1; j < k; ++j) acc -= Real(j) * l(j) * s[k - j];
    l(k) = acc / Real(k);
  }
  return Series<Real>(std::move(l));
}

// exp of a series with constant term 0.
template <typename Real>
Series<Real> exp0(const Series<Real>& s) {
  using Coeffs = typename Series<Real>::Coeffs;
  if (std::abs(s[0]) > Real(1e-12)) {
    throw BranchPointAtOrigin("exp0: constant term must vanish");
  }
  const auto order = s.order();
  Coeffs e = Coeffs::Zero(order + 1);
  e(0) = Real(1);
  for (Eigen::Index k = 1; k <= order; ++k) {
    std::complex<Real> acc(0);
    for (Eigen::Index j = 1; j <= k; ++j) acc += Real(j) * s[j] * e(k - j);
    e(k) = acc / Real(k);
  }
  return Series<Real>(std::move(e));
}

// s^alpha on the principal branch, s(0) = 1.
template <typename Real>
Series<Real> powc(const Series<Real>& s, std::complex<Real> alpha) {
  if (std::abs(s[0] - Real(1)) > Real(1e-12)) {
    throw BranchPointAtOrigin("powc: constant term must equal 1");
  }
  return exp0(scale(log1(s), alpha));
}

template <typename Real>
std::complex<Real> evaluate(const Series<Real>& s, std::complex<Real> z) {
  std::complex<Real> acc(0);
  for (auto k = s.order(); k >= 0; --k) acc = acc * z + s[k];
  return acc;
}

// s(r e^{i theta_j}) at theta_j = 2 pi j / num_angles.
template <typename Real>
std::vector<std::complex<Real>> eval_on_circle(const Series<Real>& s, Real r, int num_angles) {
  if (!(r > Real(0) && r < Real(1))) {
    throw RadiusOutOfRange("eval_on_circle: radius must lie in (0, 1)");
  }
  if (num_angles <= 0) throw RadiusOutOfRange("eval_on_circle: need a positive number of angles");
  std::vector<std::complex<Real>> out;
  out.reserve(static_cast<std::size_t>(num_angles));
  const Real step = Real(2) * std::numbers::pi_v<Real> / Real(num_angles);
  for (int j = 0; j < num_angles; ++j) {
    out.push_back(evaluate(s, std::polar(r, step * Real(j))));
  }
  return out;
}

// The normalized f (f(0) = 0, f'(0) = 1) with z f'/f = q, q(0) = 1.
// Coefficientwise: (k-1) f_k = sum_{j=1}^{k-1} f_j q_{k-j}.
// The result has order min(order, q.order() + 1).
template <typename Real>
Series<Real> from_log_derivative(const Series<Real>& q, Eigen::Index order) {
  using Coeffs = typename Series<Real>::Coeffs;
  if (std::abs(q[0] - Real(1)) > Real(1e-12)) {
    throw BranchPointAtOrigin("from_log_derivative: q must satisfy q(0) = 1");
  }
  order = std::min(order, q.order() + 1);
  Coeffs f = Coeffs::Zero(std::max<Eigen::Index>(order, 1) + 1);
  f(1) = Real(1);
  for (Eigen::Index k = 2; k <= order; ++k) {
    std::complex<Real> acc(0);
    for (Eigen::Index j = 1; j < k; ++j) acc += f(j) * q[k - j];
    f(k) = acc / Real(k - 1);
  }
  return Series<Real>(std::move(f));
}

}  // namespace schlicht
