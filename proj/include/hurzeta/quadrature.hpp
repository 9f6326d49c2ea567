#pragma once

// Adaptive Gauss-Kronrod integration on (0, 1) for complex integrands.
// Only interior nodes are ever sampled, so integrands may be singular (or
// merely undefined) at 0 and 1.

#include <functional>
#include <string>
#include <vector>

#include "hurzeta/common.hpp"

namespace hurzeta {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_subdivisions = 200;
  /// Width of the neighborhoods [0, m] and [1 - m, 1] that the cot-weighted
  /// rule handles with a local model instead of sampling.
  double endpoint_margin = 1e-8;
  /// Relative size |g(0)|, |g(1)| may reach (vs. the probe-grid scale of g)
  /// before integrate_cot_weighted declares the integral divergent.
  double endpoint_tol = 1e-9;

  void validate() const;  // throws ErrorKind::domain
};

enum class QuadWarning {
  budget_exhausted,  // ran out of subdivisions before meeting the tolerance
  roundoff_limited,  // remaining error is below what double arithmetic can resolve
  endpoint_residual, // g(0) or g(1) nonzero at the rounding level; pole part dropped
};

std::string_view to_string(QuadWarning w) noexcept;

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
  std::vector<QuadWarning> warnings;

  bool has_warning(QuadWarning w) const noexcept;
};

using Integrand = std::function<Complex(double)>;

/// Integral of f over [a, b], starting from `initial_panels` equal panels and
/// bisecting the worst panel until max(rel_tol |I|, abs_tol) is met.
QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec, long initial_panels = 1);

QuadratureResult integrate_open(const Integrand& f, const QuadratureSpec& spec = {});

/// int_0^1 g(u) cot(pi u) du for g vanishing at both endpoints.
///
/// The interior [m, 1 - m] goes through integrate_interval. On [0, m] the weight
/// is split as cot(pi u) = 1/(pi u) + (cot(pi u) - 1/(pi u)) and g is replaced
/// by a linear model through the origin fitted on three points; the pole part
/// then integrates in closed form. [1 - m, 1] is the mirror image.
///
/// Throws ErrorKind::divergence if g does not vanish at an endpoint.
QuadratureResult integrate_cot_weighted(const Integrand& g, const QuadratureSpec& spec = {});

/// Like integrate_open, but the first partition uses panels no wider than
/// 1/(4n) so that oscillations of frequency n are resolved from the start.
QuadratureResult integrate_oscillatory(const Integrand& f, long n,
                                       const QuadratureSpec& spec = {});

}  // namespace hurzeta
