#include "hurzeta/genfun.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "hurzeta/hurwitz.hpp"
#include "hurzeta/special_functions.hpp"

namespace hurzeta {
namespace {

constexpr double kPi = Constants::pi;
constexpr double kTwoPi = 2.0 * Constants::pi;

double dist_to_integer(Complex z) { return std::abs(z - std::round(z.real())); }

std::string fmt(Complex z) {
  std::ostringstream s;
  s.precision(17);
  s << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return s.str();
}

Complex cot(Complex z) { return std::cos(z) / std::sin(z); }

// sinh(cu) / sinh(c), even in c; the exponential form avoids overflow for
// large Re c.
Complex sinh_ratio(Complex c, double u) {
  if (c.real() < 0.0) c = -c;
  if (c.real() > 1.0) {
    return std::exp(c * (u - 1.0)) * expm1(-2.0 * c * u) / expm1(-2.0 * c);
  }
  return std::sinh(c * u) / std::sinh(c);
}

// e_p = B_{2p} (2 - 2^{2p}) / (2p)!, the coefficients of the sinh-kernel and
// odd-zeta polynomials. Exact, grown on demand.
class KernelCoefficients {
 public:
  const Rational& exact(int p) {
    std::lock_guard lock(mutex_);
    ensure(p);
    return exact_[static_cast<std::size_t>(p)];
  }

  // long double keeps the exponent range that c^{2p} e_p needs for p ~ 400.
  long double wide(int p) {
    std::lock_guard lock(mutex_);
    ensure(p);
    return wide_[static_cast<std::size_t>(p)];
  }

 private:
  void ensure(int p) {
    if (p < static_cast<int>(exact_.size())) return;
    const int max_p = std::max(p, 2 * static_cast<int>(exact_.size()) + 32);
    const BernoulliTable table(2 * max_p);
    exact_.clear();
    wide_.clear();
    Rational fact = 1;
    for (int q = 0; q <= max_p; ++q) {
      if (q > 0) fact *= Rational(BigInt(2 * q - 1) * BigInt(2 * q));
      BigInt pow2 = 1;
      pow2 <<= static_cast<unsigned>(2 * q);
      const Rational e = table.exact(2 * q) * Rational(BigInt(2) - pow2) / fact;
      exact_.push_back(e);
      wide_.push_back(to_long_double(e));
    }
  }

  static long double to_long_double(const Rational& r) {
    const mpq_t& q = r.backend().data();
    if (mpq_sgn(q) == 0) return 0.0L;
    long ne = 0;
    long de = 0;
    const double n = mpz_get_d_2exp(&ne, mpq_numref(q));
    const double d = mpz_get_d_2exp(&de, mpq_denref(q));
    return std::ldexp(static_cast<long double>(n) / d, static_cast<int>(ne - de));
  }

  std::mutex mutex_;
  std::vector<Rational> exact_;
  std::vector<long double> wide_;
};

KernelCoefficients& kernel_coefficients() {
  static KernelCoefficients table;
  return table;
}

void refuse_near(const GenFunCase& gc, Complex x, Complex b) {
  for (const auto& [name, dist] : gc.singular_loci()) {
    if (dist < kSingularGuard) {
      std::ostringstream msg;
      msg << "closed form is ill-conditioned near " << name << " (distance " << dist
          << ") at x = " << fmt(x) << ", b = " << fmt(b);
      throw Error(ErrorKind::ill_conditioned, msg.str());
    }
  }
}

}  // namespace

std::string_view to_string(GenFunBranch b) noexcept {
  switch (b) {
    case GenFunBranch::generic: return "generic";
    case GenFunBranch::b_zero: return "b_zero";
    case GenFunBranch::b_pos_int: return "b_pos_int";
    case GenFunBranch::b_neg_int: return "b_neg_int";
    case GenFunBranch::half_int_unsupported: return "half_int_unsupported";
  }
  return "unknown";
}

std::vector<std::pair<std::string, double>> GenFunCase::singular_loci() const {
  switch (tag) {
    case GenFunBranch::generic:
      return {{"x = b", dist_x_minus_b}, {"2(x - b) in Z", dist_2x_minus_b_int}};
    case GenFunBranch::b_zero:
    case GenFunBranch::b_pos_int:
    case GenFunBranch::b_neg_int:
      return {{"2x in Z", dist_2x_int}};
    case GenFunBranch::half_int_unsupported:
      return {};
  }
  return {};
}

GenFunCase classify_case(Complex x, Complex b) {
  GenFunCase gc;
  gc.dist_x_minus_b = std::abs(x - b);
  gc.dist_2b_int = dist_to_integer(2.0 * b);
  gc.dist_2x_minus_b_int = dist_to_integer(2.0 * (x - b));
  gc.dist_2x_int = dist_to_integer(2.0 * x);
  gc.dist_x_int = dist_to_integer(x);
  gc.dist_x_minus_b_int = dist_to_integer(x - b);

  if (gc.dist_2b_int < kIntEps) {
    const long twice = std::lround((2.0 * b).real());
    if (twice % 2 != 0) {
      gc.tag = GenFunBranch::half_int_unsupported;
    } else {
      gc.b_int = twice / 2;
      gc.tag = gc.b_int == 0 ? GenFunBranch::b_zero
               : gc.b_int > 0 ? GenFunBranch::b_pos_int
                              : GenFunBranch::b_neg_int;
    }
  } else {
    gc.tag = GenFunBranch::generic;
    gc.near_branch_boundary = gc.dist_2b_int < kSingularGuard;
  }
  return gc;
}

GenFunEval genfun_closed(Complex x, Complex b, const QuadratureSpec& spec) {
  if (!is_finite(x) || !is_finite(b)) throw Error(ErrorKind::domain, "x and b must be finite");
  GenFunEval out;
  out.x = x;
  out.b = b;
  out.gcase = classify_case(x, b);
  const GenFunCase& gc = out.gcase;
  if (gc.tag == GenFunBranch::half_int_unsupported) {
    throw Error(ErrorKind::unsupported,
                "half-integer b has no closed form for the generating function (b = " + fmt(b) +
                    ")");
  }
  if (gc.near_branch_boundary) out.warnings.emplace_back("near_branch_boundary");
  if (std::abs(x - 2.0 * b) <= 1e-12 * std::max(1.0, std::abs(x))) {
    out.warnings.emplace_back("x_equals_2b_integral_vanishes");
  }
  // Every term carries a factor x; the integer branches are 0/0 there.
  if (x == Complex{}) {
    out.quadrature.converged = true;
    return out;
  }
  refuse_near(gc, x, b);

  const Complex pix = kPi * x;
  Integrand g;
  if (gc.tag == GenFunBranch::generic) {
    out.rational_term = x * x / (2.0 * b * (x - b));
    out.trig_term = -pix * std::sin(kPi * x) / (2.0 * std::sin(kPi * b)) / std::sin(kPi * (x - b));
    const Complex a = kTwoPi * (x - b);
    const Complex c = kTwoPi * b;
    const Complex sa = std::sin(a);
    const Complex sc = std::sin(c);
    g = [a, c, sa, sc](double u) { return std::sin(a * u) / sa - std::sin(c * u) / sc; };
  } else {
    const double m = static_cast<double>(gc.b_int);
    out.trig_term = -pix / 2.0 * cot(kPi * x);
    const Complex s2x = std::sin(kTwoPi * x);
    if (gc.tag == GenFunBranch::b_zero) {
      out.rational_term = 0.5;
      const Complex a = kTwoPi * x;
      g = [a, s2x](double u) { return std::sin(a * u) / s2x - u; };
    } else {
      out.rational_term = x * x / (2.0 * m * (x - m));
      if (gc.tag == GenFunBranch::b_neg_int) out.rational_term += 1.0;
      const Complex a = kTwoPi * (x - m);
      g = [a, s2x, m](double u) {
        return std::sin(a * u) / s2x - u * std::cos(kTwoPi * m * u);
      };
    }
  }

  out.quadrature = integrate_cot_weighted(g, spec);
  if (!out.quadrature.converged) out.warnings.emplace_back("quadrature_not_converged");
  out.integral_term = -pix * out.quadrature.value;
  out.total = out.rational_term + out.trig_term + out.integral_term;
  return out;
}

double genfun_radius(Complex b) {
  // The nearest j + b (j >= 1) is at j = max(1, round(-Re b)) or a neighbor.
  const long centre = std::max(1L, std::lround(-b.real()));
  double r = INFINITY;
  for (long j = std::max(1L, centre - 1); j <= centre + 1; ++j) {
    const double d = std::abs(static_cast<double>(j) + b);
    if (d > 0.0) r = std::min(r, d);
  }
  return r;
}

Complex genfun_coefficient(int k, Complex b, double tol) {
  if (k < 2) throw Error(ErrorKind::domain, "generating-function coefficients start at k = 2");
  Complex head{};
  long j = 1;
  for (; (static_cast<double>(j) + b).real() <= 0.5; ++j) {
    const Complex base = static_cast<double>(j) + b;
    if (base != Complex{}) head += ipow(base, -k);
  }
  return head + hurwitz_series_oracle(k, b + static_cast<double>(j), std::max(tol, 1e-300));
}

SeriesSum genfun_series(Complex x, Complex b, int kmax, double margin) {
  if (kmax < 2) throw Error(ErrorKind::domain, "kmax must be >= 2");
  const double r = genfun_radius(b);
  const double ax = std::abs(x);
  if (!(ax < (1.0 - margin) * r)) {
    std::ostringstream msg;
    msg << "|x| = " << ax << " is outside the series disc (radius " << r << ", margin "
        << margin << ")";
    throw Error(ErrorKind::divergence, msg.str());
  }
  SeriesSum out;
  out.kmax = kmax;
  if (ax == 0.0) return out;

  Complex sum{};
  for (int k = kmax; k >= 2; --k) {
    const double tol = 1e-15 * std::pow(r, -k);
    sum += ipow(x, k) * genfun_coefficient(k, b, tol);
  }
  out.value = sum;

  // sum_{j} |j + b|^{-K} at K = kmax, then every later coefficient is at most
  // r^{-1} times the previous one.
  const int kk = kmax;
  double abs_sum = 0.0;
  long j = 1;
  for (; j < 10'000'000; ++j) {
    const double d = std::abs(static_cast<double>(j) + b);
    if (d > 0.0) abs_sum += std::pow(d, -kk);
    const double base = static_cast<double>(j) + b.real();
    if (base > 1.0) {
      const double rest = std::pow(base, 1.0 - kk) / (kk - 1);
      if (rest < 1e-3 * abs_sum) {
        abs_sum += rest;
        break;
      }
    }
  }
  const double rho = ax / r;
  out.tail_bound = std::pow(ax, kk) * abs_sum * rho / (1.0 - rho);
  return out;
}

double odd_zeta_integral(int j, const QuadratureSpec& spec) {
  if (j < 1 || j > 10) throw Error(ErrorKind::domain, "odd_zeta_integral needs 1 <= j <= 10");
  auto& table = kernel_coefficients();
  // g(u) = sum_p e_p u^{2j-2p+1} / (2j-2p+1)!, coefficient of u^{2j+1-2p}
  std::vector<double> coeff(static_cast<std::size_t>(2 * j + 2), 0.0);
  for (int p = 0; p <= j; ++p) {
    const int power = 2 * j - 2 * p + 1;
    coeff[static_cast<std::size_t>(power)] =
        table.exact(p).convert_to<double>() / factorial(power);
  }
  auto g = [&coeff](double u) {
    double acc = 0.0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * u + *it;
    return Complex(acc, 0.0);
  };
  const double sign = (j % 2 == 0) ? -1.0 : 1.0;  // -(-1)^j
  const double prefactor = sign * std::pow(kTwoPi, 2 * j + 1) / 2.0;
  QuadratureSpec local = spec;
  local.abs_tol = spec.abs_tol / std::abs(prefactor);
  const QuadratureResult r = integrate_cot_weighted(g, local);
  return prefactor * r.value.real();
}

Complex sinh_kernel(Complex c, double u) {
  const Complex m = c / Complex(0.0, kPi);
  if (std::abs(m - std::round(m.real())) < 1e-12) {
    throw Error(ErrorKind::domain, "sinh c = 0 at c = " + fmt(c));
  }
  return c * sinh_ratio(c, u);
}

Complex sinh_kernel_series(Complex c, double u, int terms) {
  if (terms < 1) return {};
  using WideComplex = std::complex<long double>;
  auto& table = kernel_coefficients();
  const WideComplex cw(c.real(), c.imag());
  const WideComplex cu = cw * static_cast<long double>(u);

  // odd_prefix[i] = sum_{t<=i} (cu)^{2t+1} / (2t+1)!
  std::vector<WideComplex> odd_prefix(static_cast<std::size_t>(terms));
  WideComplex power = cu;  // (cu)^n / n! at n = 1
  WideComplex running = 0.0L;
  for (int i = 0; i < terms; ++i) {
    running += power;
    odd_prefix[static_cast<std::size_t>(i)] = running;
    const long double n = 2.0L * i + 1.0L;
    power *= cu * cu / ((n + 1.0L) * (n + 2.0L));
  }

  // sum_j sum_{p<=j} e_p c^{2p} (cu)^{2(j-p)+1}/(2(j-p)+1)! regrouped by p.
  WideComplex sum = 0.0L;
  WideComplex c2p = 1.0L;
  for (int p = 0; p < terms; ++p) {
    sum += table.wide(p) * c2p * odd_prefix[static_cast<std::size_t>(terms - 1 - p)];
    c2p *= cw * cw;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

int sinh_kernel_terms_for(Complex c, double tol) {
  const double rho = std::abs(c) / kPi;
  if (!(rho < 1.0)) {
    throw Error(ErrorKind::divergence, "sinh-kernel series diverges for |c| >= pi");
  }
  if (rho == 0.0) return 1;
  // Term j is of order 2 pi rho^{2j+1} / |1 - rho^2| near the nearest pole.
  const double scale = 4.0 * kPi / (1.0 - rho * rho);
  const double j = std::log(tol / scale) / (2.0 * std::log(rho));
  return std::max(1, static_cast<int>(std::ceil(j)) + 1);
}

TaylorRecovery zeta_from_genfun(int k, Complex b, double radius, int nodes,
                                const QuadratureSpec& spec) {
  if (k < 2) throw Error(ErrorKind::domain, "k must be >= 2");
  if (nodes < 4 * k) throw Error(ErrorKind::domain, "need at least 4k circle nodes");
  if (b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::round(b.real())) {
    throw Error(ErrorKind::domain, "b is a pole of zeta(k, .)");
  }
  const double r = genfun_radius(b);
  if (!(radius > 0.0) || !(radius < r)) {
    std::ostringstream msg;
    msg << "radius " << radius << " must lie in (0, " << r << ")";
    throw Error(ErrorKind::domain, msg.str());
  }

  auto coefficient = [&](double rad) {
    Complex acc{};
    for (int n = 0; n < nodes; ++n) {
      const double theta = kTwoPi * (n + 0.5) / nodes;
      const Complex unit = std::polar(1.0, theta);
      const GenFunEval e = genfun_closed(rad * unit, b, spec);
      acc += e.total * ipow(unit, -k);
    }
    return acc / (static_cast<double>(nodes) * std::pow(rad, k));
  };

  TaylorRecovery out;
  const Complex bk = ipow(b, -k);
  out.value = bk + coefficient(radius);
  out.value_half_radius = bk + coefficient(0.5 * radius);
  out.relative_spread = std::abs(out.value - out.value_half_radius) / std::abs(out.value);
  if (out.relative_spread > 1e-4) out.warnings.emplace_back("unstable_across_radii");
  return out;
}

std::pair<double, double> genfun_parts_real_imag(double x, double b, const QuadratureSpec& spec) {
  if (std::abs(b) < 1e-9) throw Error(ErrorKind::ill_conditioned, "b = 0 makes e^{-2 pi b} - 1 vanish");
  if (std::abs(x - b) < 1e-9) throw Error(ErrorKind::ill_conditioned, "x = b makes e^{2 pi x} - e^{2 pi b} vanish");
  if (x == 0.0) return {0.0, 0.0};

  // e^{2 pi x} - e^{2 pi b} = e^{2 pi b} (e^{2 pi (x - b)} - 1)
  const double re = x * x / (2.0 * b * (x - b)) +
                    kPi * x * std::expm1(kTwoPi * x) /
                        (std::expm1(-kTwoPi * b) * std::exp(kTwoPi * b) *
                         std::expm1(kTwoPi * (x - b)));

  const Complex a = kTwoPi * (x - b);
  const Complex c = kTwoPi * b;
  auto g = [a, c](double u) { return sinh_ratio(a, u) - sinh_ratio(c, u); };
  const QuadratureResult q = integrate_cot_weighted(g, spec);
  return {re, kPi * x * q.value.real()};
}

}  // namespace hurzeta
