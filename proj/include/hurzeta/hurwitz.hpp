#pragma once

// zeta(k, b) for integer k >= 2 and complex b from the real/imaginary-part
// decomposition of sum_j (ij + b)^{-k}, together with a direct-summation
// oracle used as ground truth.

#include <memory>
#include <string>
#include <vector>

#include "hurzeta/common.hpp"
#include "hurzeta/quadrature.hpp"

namespace hurzeta {

namespace detail {
struct WideKernel;
}

/// Evaluation point (k, b). q = exp(-2 pi i b) and the polylog weights of the
/// bracket kernel are computed once at construction.
class ZetaParams {
 public:
  /// Throws ErrorKind::domain for k < 2 or b in {0, -1, -2, ...}.
  ZetaParams(int k, Complex b);

  int k() const noexcept { return k_; }
  Complex b() const noexcept { return b_; }
  Complex q() const noexcept { return q_; }
  bool integer_b() const noexcept { return integer_b_; }

  /// Weights and B(1) below are computed in 113-bit arithmetic and rounded.
  /// (delta_{1j} + Li_{-j+1}(q)) / ((j-1)! (k-j)!), j = 1..k (index j-1).
  /// Empty when b is an integer (q = 1 is a pole).
  const std::vector<Complex>& weights() const noexcept { return weights_; }
  /// delta_{1j} + Li_{-j+1}(q), j = 1..k (index j-1).
  const std::vector<Complex>& delta_polylog() const noexcept { return delta_polylog_; }
  /// B(1) = q * sum_j weights[j].
  Complex kernel_at_one() const noexcept { return kernel_at_one_; }
  bool near_pole() const noexcept { return near_pole_; }

  const detail::WideKernel* wide() const noexcept { return wide_.get(); }

 private:
  int k_;
  Complex b_;
  Complex q_;
  bool integer_b_ = false;
  bool near_pole_ = false;
  std::vector<Complex> weights_;
  std::vector<Complex> delta_polylog_;
  Complex kernel_at_one_{};
  std::shared_ptr<const detail::WideKernel> wide_;
};

struct EvalBreakdown {
  Complex term_half_bk{};        // 1/(2 b^k)
  Complex term_polylog_single{}; // (2 pi i)^k (delta_{1k} + Li_{-k+1}(q)) / (4 (k-1)!)
  Complex term_polylog_sum{};    // (2 pi i)^k q / 4 * sum_j (...)
  Complex term_integral{};       // -i (2 pi i)^k / 2 * int_0^1 (B(u) - B(1)) cot(pi u) du
  Complex total{};
  double integral_error = 0.0;   // |prefactor| * quadrature error estimate
  bool extended_precision = false;
  QuadratureResult quadrature;
  std::vector<std::string> warnings;
};

/// One term 1/(ij + b)^k of the progression.
struct HPoint {
  long j = 0;
  Complex value{};
};

HPoint hp_point(int k, Complex b, long j);

/// Complex b outside |Im b| <= im_cap is rejected: |q| would leave double range.
inline constexpr double kImCap = 5.0;

/// Region where the combined formula has been checked against the oracle;
/// evaluations outside it carry a warning.
inline constexpr double kValidatedImB = 5.0;
inline constexpr double kValidatedReB = 10.0;

/// B(u) - B(1), evaluated in 113-bit arithmetic (the two terms nearly cancel
/// near u = 0 and for b close to an integer), where
///   B(u) = sum_{j=1}^{k} (delta_{1j} + Li_{-j+1}(q)) u^{k-j} e^{-2 pi i b u} / ((j-1)!(k-j)!).
/// Throws ErrorKind::domain for integer b.
Complex bracket_kernel(const ZetaParams& params, double u);

/// Re sum_{j>=0} (ij + b)^{-k} for real b > 0, closed form.
double real_part_formula(int k, double b);

/// Im sum_{j>=0} (ij + b)^{-k} for real b > 0, as a cot-weighted integral.
double imag_part_integral(int k, double b, const QuadratureSpec& spec = {});

/// zeta(k, b) by the combined closed-form + integral formula.
/// Throws ErrorKind::unsupported for integer b and ErrorKind::range for
/// |Im b| > kImCap.
EvalBreakdown hurwitz_zeta(const ZetaParams& params, const QuadratureSpec& spec = {});

/// Tolerances suited to hurwitz_zeta_extended.
QuadratureSpec extended_quadrature_spec();

/// The same formula carried out in 113-bit floating point and rounded to
/// double at the end. For points where the four terms cancel heavily
/// (b just below an integer, large k).
EvalBreakdown hurwitz_zeta_extended(const ZetaParams& params,
                                    const QuadratureSpec& spec = extended_quadrature_spec());

/// sum_{j=0}^{N} (j + b)^{-k} plus the midpoint tail integral
/// (N + 1/2 + b)^{1-k} / (k - 1). N is the smallest count whose remainder
/// bound k / 24 * (N - 1/2 + Re b)^{-(k+1)} is <= tol.
/// Requires Re b > 0; throws ErrorKind::capacity past max_terms.
Complex hurwitz_series_oracle(int k, Complex b, double tol = 1e-12, long max_terms = 10'000'000);

/// Oracle for any b off the poles: explicit head terms until Re(b + J) > 0,
/// then hurwitz_series_oracle.
Complex hurwitz_series_reference(int k, Complex b, double tol = 1e-12);

/// sum_{j=1}^{n} (ij + b)^{-k}; throws ErrorKind::domain on a zero denominator.
Complex hp_partial_sum(int k, Complex b, long n);

/// lim_{n->oo} hp_partial_sum(k, b, n) = i^{-k} zeta(k, -ib) - b^{-k}.
/// For real b > 0 this uses real_part_formula and imag_part_integral.
Complex hp_limit(int k, Complex b, const QuadratureSpec& spec = {});

}  // namespace hurzeta
