#include "hurzeta/special_functions.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>

#include "hurzeta/detail/formula_t.hpp"

namespace hurzeta {
namespace {

// mpq_get_d leaves overflow/underflow system dependent; go through
// (mantissa, exponent) pairs so huge B_n become +-inf and tiny ones
// denormalize the usual way.
double to_double(const Rational& r) {
  const mpq_t& q = r.backend().data();
  if (mpq_sgn(q) == 0) return 0.0;
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, mpq_numref(q));
  const double den = mpz_get_d_2exp(&den_exp, mpq_denref(q));
  const long shift = num_exp - den_exp;
  if (shift > 4096) return std::copysign(INFINITY, num);
  if (shift < -4096) return std::copysign(0.0, num);
  return std::ldexp(num / den, static_cast<int>(shift));
}

}  // namespace

BernoulliTable::BernoulliTable(int max_index) {
  if (max_index < 0) {
    throw Error(ErrorKind::capacity, "Bernoulli table size must be nonnegative");
  }
  const auto n = static_cast<std::size_t>(max_index) + 1;
  exact_.resize(n);
  exact_[0] = 1;
  for (int m = 1; m <= max_index; ++m) {
    if (m > 1 && (m % 2) == 1) {
      exact_[m] = 0;
      continue;
    }
    Rational sum = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      if (exact_[j] != 0) sum += Rational(binom) * exact_[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    exact_[m] = -sum / Rational(BigInt(m + 1));
  }

  values_.resize(n);
  scaled_.resize(n);
  Rational fact = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) fact *= static_cast<unsigned long>(i);
    values_[i] = to_double(exact_[i]);
    scaled_[i] = to_double(exact_[i] / fact);
  }
}

const Rational& BernoulliTable::exact(int n) const {
  if (n < 0 || n > max_index()) {
    throw Error(ErrorKind::capacity, "Bernoulli index " + std::to_string(n) +
                                         " beyond table max " + std::to_string(max_index()));
  }
  return exact_[static_cast<std::size_t>(n)];
}

double BernoulliTable::value(int n) const {
  exact(n);
  return values_[static_cast<std::size_t>(n)];
}

double BernoulliTable::scaled(int n) const {
  exact(n);
  return scaled_[static_cast<std::size_t>(n)];
}

const BernoulliTable& default_bernoulli_table() {
  static const BernoulliTable table;
  return table;
}

Rational bernoulli(int n) { return default_bernoulli_table().exact(n); }

PolylogRational::PolylogRational(int order) : order_(order) {
  if (order < 0) throw Error(ErrorKind::domain, "polylog order must be >= 0 (Li_{-m})");
  std::vector<BigInt> a{0, 1};  // N_0 = z
  for (int m = 0; m < order; ++m) {
    std::vector<BigInt> next(a.size() + 1, 0);
    for (std::size_t t = 0; t < a.size(); ++t) {
      BigInt c = BigInt(m + 1 - static_cast<int>(t)) * a[t];
      if (t + 1 < a.size()) c += BigInt(static_cast<long>(t + 1)) * a[t + 1];
      next[t + 1] = c;
    }
    while (next.size() > 2 && next.back() == 0) next.pop_back();
    a = std::move(next);
  }
  exact_ = std::move(a);
  coeffs_.reserve(exact_.size());
  for (const auto& c : exact_) coeffs_.push_back(c.convert_to<double>());
}

Complex PolylogRational::numerator_at(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex PolylogRational::evaluate(Complex z) const {
  if (order_ == 0) return z / (1.0 - z);
  if (std::abs(z) <= 1.0) {
    return numerator_at(z) / ipow(1.0 - z, order_ + 1);
  }
  // N_m is palindromic for m >= 1: Li_{-m}(z) = (-1)^{m+1} Li_{-m}(1/z).
  const Complex w = 1.0 / z;
  const double sign = (order_ % 2 == 0) ? -1.0 : 1.0;
  return sign * numerator_at(w) / ipow(1.0 - w, order_ + 1);
}

const PolylogRational& polylog_rational(int order) {
  constexpr int cached = 64;
  static const std::vector<PolylogRational> table = [] {
    std::vector<PolylogRational> t;
    t.reserve(cached + 1);
    for (int m = 0; m <= cached; ++m) t.emplace_back(m);
    return t;
  }();
  if (order >= 0 && order <= cached) return table[static_cast<std::size_t>(order)];

  static std::mutex mutex;
  static std::deque<PolylogRational> extra;  // stable addresses
  std::lock_guard lock(mutex);
  for (const auto& p : extra) {
    if (p.order() == order) return p;
  }
  return extra.emplace_back(order);
}

PolylogValue polylog_nonpos(int m, Complex z, double pole_guard) {
  if (z == Complex{1.0, 0.0}) {
    throw Error(ErrorKind::domain, "Li_{-" + std::to_string(m) + "}(z) has a pole at z = 1");
  }
  PolylogValue out;
  out.value = polylog_rational(m).evaluate(z);
  out.near_pole = std::abs(1.0 - z) < pole_guard;
  return out;
}

namespace detail {

template <>
const std::vector<double>& numerator_coeffs<double>(int m) {
  return polylog_rational(m).coefficients();
}

template <>
const std::vector<Quad>& numerator_coeffs<Quad>(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<Quad>> cache;  // node-based: references stay valid
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<Quad> c;
  for (const auto& e : polylog_rational(m).numerator()) c.emplace_back(e.str());
  return cache.emplace(m, std::move(c)).first->second;
}

}  // namespace detail

double harmonic_number(int k, long n) {
  double sum = 0.0;
  for (long j = n; j >= 1; --j) sum += std::pow(static_cast<double>(j), -k);
  return sum;
}

double zeta_even(int k) {
  if (k < 2 || (k % 2) != 0) {
    throw Error(ErrorKind::domain, "zeta_even needs an even k >= 2");
  }
  const auto& table = default_bernoulli_table();
  const double sign = ((k / 2) % 2 == 1) ? 1.0 : -1.0;
  return sign * table.scaled(k) * std::pow(2.0 * Constants::pi, k) / 2.0;
}

}  // namespace hurzeta
