#pragma once

// The combined closed-form + integral expression for zeta(k, b), written once
// over the real type T. hurwitz_zeta instantiates it with double; the routed
// evaluator falls back to float128 when the terms cancel too heavily.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hurzeta/detail/quadrature_t.hpp"
#include "hurzeta/detail/scalar.hpp"

namespace hurzeta::detail {

/// Numerator coefficients of Li_{-m} (see PolylogRational) rounded to T.
template <class T>
const std::vector<T>& numerator_coeffs(int m);
template <>
const std::vector<double>& numerator_coeffs<double>(int m);
template <>
const std::vector<Quad>& numerator_coeffs<Quad>(int m);

template <class T>
Cx<T> horner(const std::vector<T>& c, const Cx<T>& z) {
  Cx<T> acc(T(0), T(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + Cx<T>(*it, T(0));
  return acc;
}

/// Li_{-m}(z), given z and 1 - z (the latter computed without cancellation by
/// the caller when z is close to 1).
template <class T>
Cx<T> polylog_t(int m, const Cx<T>& z, const Cx<T>& one_minus_z) {
  if (m == 0) return z / one_minus_z;
  const auto& c = numerator_coeffs<T>(m);
  if (magnitude<T>(z) <= T(1)) return horner<T>(c, z) / ipow_t<T>(one_minus_z, m + 1);
  // N_m is palindromic: Li_{-m}(z) = (-1)^{m+1} Li_{-m}(1/z).
  const Cx<T> w = Cx<T>(T(1), T(0)) / z;
  const Cx<T> one_minus_w = -one_minus_z * w;
  const Cx<T> v = horner<T>(c, w) / ipow_t<T>(one_minus_w, m + 1);
  return (m % 2 == 0) ? Cx<T>(-v) : v;
}

/// exp(-2 pi i z), real part of z reduced mod 1 first.
template <class T>
Cx<T> exp_minus_two_pi_i(const Cx<T>& z) {
  using std::cos;
  using std::exp;
  using std::round;
  using std::sin;
  const T two_pi = T(2) * pi<T>();
  const T frac = T(z.real() - round(T(z.real())));
  const T mag = exp(T(two_pi * T(z.imag())));
  return Cx<T>(mag * cos(T(two_pi * frac)), -mag * sin(T(two_pi * frac)));
}

/// 1 - exp(-2 pi i z) with no cancellation when z is close to an integer.
template <class T>
Cx<T> one_minus_exp_minus_two_pi_i(const Cx<T>& z) {
  using std::cos;
  using std::exp;
  using std::expm1;
  using std::round;
  using std::sin;
  const T two_pi = T(2) * pi<T>();
  const T x = two_pi * T(z.imag());  // exponent, real part
  const T y = -two_pi * T(z.real() - round(T(z.real())));
  const T s = sin(T(y / 2));
  const T re = expm1(x) * cos(y) - T(2) * s * s;
  const T im = exp(x) * sin(y);
  return Cx<T>(-re, -im);
}

template <class T>
T factorial_t(int n) {
  T f(1);
  for (int i = 2; i <= n; ++i) f *= T(i);
  return f;
}

/// (2 pi i)^k with the quadrant taken exactly.
template <class T>
Cx<T> two_pi_i_pow_t(int k) {
  using std::pow;
  const T mag = pow(T(T(2) * pi<T>()), T(k));
  switch (((k % 4) + 4) % 4) {
    case 0: return Cx<T>(mag, T(0));
    case 1: return Cx<T>(T(0), mag);
    case 2: return Cx<T>(-mag, T(0));
    default: return Cx<T>(T(0), -mag);
  }
}

template <class T>
class FormulaT {
 public:
  /// b must not be an integer (q = 1 is a polylog pole); the caller checks.
  FormulaT(int k, const Cx<T>& b) : k_(k), b_(b) {
    q_ = exp_minus_two_pi_i<T>(b);
    const Cx<T> one_minus_q = one_minus_exp_minus_two_pi_i<T>(b);
    dl_.resize(static_cast<std::size_t>(k));
    w_.resize(static_cast<std::size_t>(k));
    Cx<T> sum(T(0), T(0));
    for (int j = 1; j <= k; ++j) {
      // delta_{1j} + Li_0(q) = 1 / (1 - q), without the cancellation for |q| >> 1
      const Cx<T> d = (j == 1) ? Cx<T>(Cx<T>(T(1), T(0)) / one_minus_q)
                               : polylog_t<T>(j - 1, q_, one_minus_q);
      dl_[j - 1] = d;
      w_[j - 1] = d / T(factorial_t<T>(j - 1) * factorial_t<T>(k - j));
      sum += w_[j - 1];
    }
    at_one_ = q_ * sum;
  }

  int k() const { return k_; }
  const Cx<T>& b() const { return b_; }
  const Cx<T>& q() const { return q_; }
  const std::vector<Cx<T>>& delta_polylog() const { return dl_; }
  const std::vector<Cx<T>>& weights() const { return w_; }
  const Cx<T>& kernel_at_one() const { return at_one_; }

  /// B(u) - B(1).
  Cx<T> kernel(const T& u) const {
    Cx<T> poly(T(0), T(0));
    for (const auto& wj : w_) poly = poly * u + wj;
    return poly * exp_minus_two_pi_i<T>(Cx<T>(b_ * u)) - at_one_;
  }

 private:
  int k_;
  Cx<T> b_;
  Cx<T> q_;
  std::vector<Cx<T>> dl_;
  std::vector<Cx<T>> w_;
  Cx<T> at_one_;
};

template <class T>
struct FormulaTerms {
  Cx<T> half_bk;
  Cx<T> polylog_single;
  Cx<T> polylog_sum;
  Cx<T> integral;  // prefactor times the quadrature value
  Cx<T> total;
  T integral_error{0};  // prefactor times the quadrature error estimate
  BasicQuadResult<T> quad;
};

template <class T>
FormulaTerms<T> assemble_formula(const FormulaT<T>& f, const QuadratureSpec& spec) {
  using std::max;
  const int k = f.k();
  const Cx<T> tpik = two_pi_i_pow_t<T>(k);
  FormulaTerms<T> out;
  out.half_bk = ipow_t<T>(f.b(), -k) / T(2);
  out.polylog_single = tpik * f.delta_polylog()[k - 1] / T(T(4) * factorial_t<T>(k - 1));
  out.polylog_sum = tpik / T(4) * f.kernel_at_one();

  const Cx<T> prefactor = Cx<T>(T(0), T(-1)) * tpik / T(2);
  const T pre_mag = magnitude<T>(prefactor);
  IntegrandT<T> kernel = [&f](const T& u) { return f.kernel(u); };
  // B(1) = q * sum(w) may be far smaller than its summands when |q| is large.
  T summands{0};
  for (const auto& wj : f.weights()) summands += magnitude<T>(wj);
  const T floor = max(magnitude<T>(f.weights().back()), T(magnitude<T>(f.q()) * summands));
  BasicQuadResult<T> quad = integrate_cot_weighted_t<T>(kernel, spec, floor);

  const Cx<T> closed = out.half_bk + out.polylog_single + out.polylog_sum;
  // The tolerance is meant for zeta itself, not for the integral: tighten the
  // integral once if its contribution to the error is too large.
  const T target = max(T(T(spec.rel_tol) * magnitude<T>(Cx<T>(closed + prefactor * quad.value))),
                       T(spec.abs_tol));
  const bool roundoff =
      std::find(quad.warnings.begin(), quad.warnings.end(), QuadWarning::roundoff_limited) !=
      quad.warnings.end();
  if (pre_mag * quad.error > target && !roundoff) {
    QuadratureSpec tight = spec;
    tight.abs_tol = max(0.5 * to_double(T(target / pre_mag)), std::numeric_limits<double>::min());
    tight.rel_tol = max(spec.rel_tol * 1e-3, 4.0 * to_double(epsilon<T>()));
    tight.max_subdivisions = std::max(spec.max_subdivisions, 400);
    BasicQuadResult<T> second = integrate_cot_weighted_t<T>(kernel, tight, floor);
    second.evaluations += quad.evaluations;
    quad = std::move(second);
  }

  out.integral = prefactor * quad.value;
  out.integral_error = pre_mag * quad.error;
  out.total = closed + out.integral;
  out.quad = std::move(quad);
  return out;
}

}  // namespace hurzeta::detail
