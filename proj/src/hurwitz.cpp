#include "hurzeta/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hurzeta/detail/formula_t.hpp"
#include "hurzeta/special_functions.hpp"

namespace hurzeta {
namespace {

constexpr double kTwoPi = 2.0 * Constants::pi;

double kronecker(int a, int b) { return a == b ? 1.0 : 0.0; }

Complex exp_minus_two_pi_i(Complex z) { return detail::exp_minus_two_pi_i<double>(z); }

std::string describe(int k, Complex b) {
  std::ostringstream s;
  s.precision(17);
  s << "k = " << k << ", b = " << b.real() << (b.imag() < 0 ? "" : "+") << b.imag() << "i";
  return s.str();
}

// Kahan-compensated sum of terms produced in the order given.
class KahanSum {
 public:
  void add(Complex x) {
    const Complex y = x - comp_;
    const Complex t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  Complex value() const { return sum_; }

 private:
  Complex sum_{};
  Complex comp_{};
};

}  // namespace

namespace detail {
struct WideKernel {
  FormulaT<Quad> formula;
};
}  // namespace detail

ZetaParams::ZetaParams(int k, Complex b) : k_(k), b_(b) {
  if (k < 2) throw Error(ErrorKind::domain, "k must be >= 2 (" + describe(k, b) + ")");
  if (!is_finite(b)) throw Error(ErrorKind::domain, "b must be finite");
  const bool on_int = b.imag() == 0.0 && b.real() == std::round(b.real());
  if (on_int && b.real() <= 0.0) {
    throw Error(ErrorKind::domain, "b is a pole of zeta(k, .) (" + describe(k, b) + ")");
  }
  integer_b_ = on_int;
  q_ = exp_minus_two_pi_i(b);
  if (integer_b_) return;

  auto wide = std::make_shared<detail::WideKernel>(
      detail::WideKernel{detail::FormulaT<detail::Quad>(k, detail::from_complex_double<detail::Quad>(b))});
  const auto& f = wide->formula;
  for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
    delta_polylog_.push_back(detail::to_complex_double<detail::Quad>(f.delta_polylog()[j]));
    weights_.push_back(detail::to_complex_double<detail::Quad>(f.weights()[j]));
  }
  kernel_at_one_ = detail::to_complex_double<detail::Quad>(f.kernel_at_one());
  wide_ = std::move(wide);
  near_pole_ = std::abs(detail::one_minus_exp_minus_two_pi_i<double>(b)) < 1e-12;
}

HPoint hp_point(int k, Complex b, long j) {
  const Complex base = Complex(0.0, static_cast<double>(j)) + b;
  if (base == Complex{}) {
    throw Error(ErrorKind::domain, "ij + b = 0 at j = " + std::to_string(j));
  }
  return {j, ipow(base, -k)};
}

Complex bracket_kernel(const ZetaParams& params, double u) {
  if (params.integer_b()) {
    throw Error(ErrorKind::domain,
                "bracket kernel needs non-integer b: Li_{-m}(q) has a pole at q = 1");
  }
  return detail::to_complex_double<detail::Quad>(params.wide()->formula.kernel(detail::Quad(u)));
}

double real_part_formula(int k, double b) {
  if (!(b > 0.0)) throw Error(ErrorKind::domain, "real_part_formula needs real b > 0");
  if (k < 2) throw Error(ErrorKind::domain, "k must be >= 2");
  const double p = std::exp(-kTwoPi * b);
  const double two_pi_k = std::pow(kTwoPi, k);

  double sum = 0.0;
  for (int j = 1; j <= k; ++j) {
    const double dl = kronecker(1, j) + polylog_nonpos(j - 1, p).value.real();
    sum += dl / (factorial(j - 1) * factorial(k - j));
  }
  const double single = kronecker(1, k) + polylog_nonpos(k - 1, p).value.real();
  return 0.5 * std::pow(b, -k) + two_pi_k * single / (4.0 * factorial(k - 1)) +
         two_pi_k * p / 4.0 * sum;
}

double imag_part_integral(int k, double b, const QuadratureSpec& spec) {
  if (!(b > 0.0)) throw Error(ErrorKind::domain, "imag_part_integral needs real b > 0");
  if (k < 2) throw Error(ErrorKind::domain, "k must be >= 2");
  const double p = std::exp(-kTwoPi * b);

  std::vector<double> w(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    const double dl = kronecker(1, j) + polylog_nonpos(j - 1, p).value.real();
    w[j - 1] = dl / (factorial(j - 1) * factorial(k - j));
  }
  auto kernel = [&w, b, p](double u) -> Complex {
    double poly = 0.0;
    double at_one = 0.0;
    for (double wj : w) {
      poly = poly * u + wj;
      at_one += wj;
    }
    return poly * std::exp(-kTwoPi * b * u) - at_one * p;
  };
  const QuadratureResult r = integrate_cot_weighted(kernel, spec);
  return -std::pow(kTwoPi, k) / 2.0 * r.value.real();
}

namespace {

void check_formula_domain(const ZetaParams& params) {
  if (params.integer_b()) {
    throw Error(ErrorKind::unsupported,
                "integer b puts q = exp(-2 pi i b) on the polylog pole; use the series/shift "
                "route (" + describe(params.k(), params.b()) + ")");
  }
  if (std::abs(params.b().imag()) > kImCap) {
    throw Error(ErrorKind::range, "|Im b| exceeds the cap of 5: |q| leaves double range (" +
                                      describe(params.k(), params.b()) + ")");
  }
}

template <class T>
EvalBreakdown run_formula(const ZetaParams& params, const QuadratureSpec& spec) {
  check_formula_domain(params);
  const Complex b = params.b();
  EvalBreakdown out;
  if (params.near_pole() || dist_to_int(b) < 1e-6) out.warnings.emplace_back("near_integer_b");
  if (std::abs(b.imag()) > kValidatedImB || std::abs(b.real()) > kValidatedReB) {
    out.warnings.emplace_back("outside_validated_region");
  }

  const detail::FormulaT<T> formula(params.k(), detail::from_complex_double<T>(b));
  detail::FormulaTerms<T> terms = detail::assemble_formula<T>(formula, spec);

  out.term_half_bk = detail::to_complex_double<T>(terms.half_bk);
  out.term_polylog_single = detail::to_complex_double<T>(terms.polylog_single);
  out.term_polylog_sum = detail::to_complex_double<T>(terms.polylog_sum);
  out.term_integral = detail::to_complex_double<T>(terms.integral);
  out.total = detail::to_complex_double<T>(terms.total);
  out.quadrature.value = detail::to_complex_double<T>(terms.quad.value);
  out.quadrature.error_estimate = detail::to_double(terms.quad.error);
  out.quadrature.evaluations = terms.quad.evaluations;
  out.quadrature.converged = terms.quad.converged;
  out.quadrature.warnings = std::move(terms.quad.warnings);
  out.integral_error = detail::to_double(terms.integral_error);

  const double target = std::max(spec.rel_tol * std::abs(out.total), spec.abs_tol);
  if (out.integral_error > target) out.warnings.emplace_back("quadrature_not_converged");
  const double largest = std::max({std::abs(out.term_half_bk), std::abs(out.term_polylog_single),
                                   std::abs(out.term_polylog_sum), std::abs(out.term_integral)});
  if (64.0 * detail::to_double(detail::epsilon<T>()) * largest > target) {
    out.warnings.emplace_back("terms_cancel");
  }
  return out;
}

}  // namespace

QuadratureSpec extended_quadrature_spec() {
  QuadratureSpec spec;
  spec.rel_tol = 1e-28;
  spec.abs_tol = 1e-250;
  spec.max_subdivisions = 400;
  spec.endpoint_margin = 1e-17;
  return spec;
}

EvalBreakdown hurwitz_zeta(const ZetaParams& params, const QuadratureSpec& spec) {
  return run_formula<double>(params, spec);
}

EvalBreakdown hurwitz_zeta_extended(const ZetaParams& params, const QuadratureSpec& spec) {
  EvalBreakdown out = run_formula<detail::Quad>(params, spec);
  out.extended_precision = true;
  return out;
}

Complex hurwitz_series_oracle(int k, Complex b, double tol, long max_terms) {
  if (k < 2) throw Error(ErrorKind::domain, "oracle needs k >= 2");
  if (!(b.real() > 0.0)) throw Error(ErrorKind::domain, "oracle needs Re b > 0");
  if (!(tol > 0.0)) throw Error(ErrorKind::domain, "oracle tolerance must be positive");

  // k/24 (N - 1/2 + Re b)^{-(k+1)} <= tol
  const double reach = std::pow(static_cast<double>(k) / (24.0 * tol), 1.0 / (k + 1));
  const double needed = std::ceil(reach - b.real() + 0.5);
  if (needed > static_cast<double>(max_terms)) {
    std::ostringstream msg;
    msg << "oracle needs about " << needed << " terms for tol " << tol << ", budget is "
        << max_terms;
    throw Error(ErrorKind::capacity, msg.str());
  }
  const long n = std::max(0L, static_cast<long>(needed));

  KahanSum sum;
  sum.add(ipow(static_cast<double>(n) + 0.5 + b, 1 - k) / static_cast<double>(k - 1));
  for (long j = n; j >= 0; --j) sum.add(ipow(static_cast<double>(j) + b, -k));
  return sum.value();
}

Complex hurwitz_series_reference(int k, Complex b, double tol) {
  if (b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::round(b.real())) {
    throw Error(ErrorKind::domain, "b is a pole of zeta(k, .)");
  }
  if (b.real() > 0.0) return hurwitz_series_oracle(k, b, tol);
  const long head = static_cast<long>(std::floor(-b.real())) + 1;
  Complex sum = hurwitz_series_oracle(k, b + static_cast<double>(head), tol);
  for (long j = head - 1; j >= 0; --j) sum += ipow(b + static_cast<double>(j), -k);
  return sum;
}

Complex hp_partial_sum(int k, Complex b, long n) {
  if (k < 1) throw Error(ErrorKind::domain, "hp_partial_sum needs k >= 1");
  if (n < 1) throw Error(ErrorKind::domain, "hp_partial_sum needs n >= 1");
  KahanSum sum;
  for (long j = n; j >= 1; --j) sum.add(hp_point(k, b, j).value);
  return sum.value();
}

Complex hp_limit(int k, Complex b, const QuadratureSpec& spec) {
  if (b.imag() == 0.0 && b.real() > 0.0) {
    const double re = real_part_formula(k, b.real());
    const double im = imag_part_integral(k, b.real(), spec);
    return Complex(re, im) - ipow(b, -k);
  }
  // sum_{j>=0} (ij + b)^{-k} = i^{-k} zeta(k, -ib)
  const Complex shifted = Complex(0.0, -1.0) * b;
  const EvalBreakdown z = hurwitz_zeta(ZetaParams(k, shifted), spec);
  return i_pow(-k) * z.total - ipow(b, -k);
}

}  // namespace hurzeta
