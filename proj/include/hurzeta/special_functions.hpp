#pragma once

// Exact building blocks: Bernoulli numbers, polylogarithms of non-positive
// integer order, generalized harmonic numbers and a few constants.

#include <boost/multiprecision/gmp.hpp>

#include <vector>

#include "hurzeta/common.hpp"

namespace hurzeta {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

struct Constants {
  static constexpr double pi = 3.14159265358979323846;
  static constexpr double catalan = 0.91596559417721901505;
  static constexpr double euler_gamma = 0.57721566490153286061;
};

/// Bernoulli numbers B_0..B_max (B_1 = -1/2) from
/// sum_{j=0}^{m} C(m+1, j) B_j = 0, kept as exact rationals.
/// Immutable after construction.
class BernoulliTable {
 public:
  static constexpr int default_max = 64;

  explicit BernoulliTable(int max_index = default_max);

  int max_index() const noexcept { return static_cast<int>(exact_.size()) - 1; }

  const Rational& exact(int n) const;
  /// Double mirror of B_n; overflows to +-inf past n ~ 260.
  double value(int n) const;
  /// B_n / n! as a double, finite for every n the table can hold.
  double scaled(int n) const;

 private:
  std::vector<Rational> exact_;
  std::vector<double> values_;
  std::vector<double> scaled_;
};

const BernoulliTable& default_bernoulli_table();

/// Exact B_n from the default table; throws ErrorKind::capacity past its max.
Rational bernoulli(int n);

/// Li_{-m}(z) = N_m(z) / (1 - z)^{m+1}, where N_m is built by the
/// coefficient recurrence N_{m+1} = z((1 - z) N_m' + (m + 1) N_m), N_0 = z.
/// For m >= 1 the coefficients of z^1..z^m are the Eulerian numbers A(m, .).
class PolylogRational {
 public:
  explicit PolylogRational(int order);

  int order() const noexcept { return order_; }
  /// Coefficient of z^i in N_m, i = 0..max(m, 1); index 0 is always zero.
  const std::vector<BigInt>& numerator() const noexcept { return exact_; }
  /// Double mirror of numerator().
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }

  Complex evaluate(Complex z) const;

 private:
  Complex numerator_at(Complex z) const;

  int order_;
  std::vector<BigInt> exact_;
  std::vector<double> coeffs_;
};

/// Cached rational form for order m (orders <= 64 are built once).
const PolylogRational& polylog_rational(int order);

struct PolylogValue {
  Complex value;
  bool near_pole = false;  // |1 - z| below the guard
};

PolylogValue polylog_nonpos(int m, Complex z, double pole_guard = 1e-12);

/// H_k(n) = sum_{j=1}^{n} j^{-k}; H_k(0) = 0.
double harmonic_number(int k, long n);

/// Riemann zeta at even k >= 2 from the Bernoulli closed form.
double zeta_even(int k);

}  // namespace hurzeta
