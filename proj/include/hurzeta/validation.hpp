#pragma once

// Finite-n convergence checks: the oscillatory integral limits behind the
// real and imaginary parts, and partial sums of the progression against
// their limits.

#include <string>
#include <string_view>
#include <vector>

#include "hurzeta/common.hpp"
#include "hurzeta/quadrature.hpp"

namespace hurzeta {

enum class Verdict {
  pass,
  fail,
  exact,         // every deviation at the quadrature floor: nothing to fit
  insufficient,  // fewer than three usable points
};

std::string_view to_string(Verdict v) noexcept;

struct RateFit {
  double rate = 0.0;  // -slope of log|dev| against log n
  int points = 0;
};

/// Least squares on (log n, log dev). Points with dev <= 0 are skipped.
RateFit fit_rate(const std::vector<long>& n_values, const std::vector<double>& deviations);

struct ConvergenceReport {
  std::string parameter;
  std::vector<long> n_values;
  std::vector<double> observed;
  std::vector<double> target;      // per n; constant unless the model grows with n
  std::vector<double> deviation;   // |observed - target|
  std::vector<double> error_estimate;
  std::vector<bool> converged;
  std::string target_model;
  double fitted_rate = 0.0;        // NaN when no fit was possible
  double rate_lo = 0.0;
  double rate_hi = 0.0;
  Verdict verdict = Verdict::insufficient;
  std::string note;

  bool ok() const noexcept { return verdict == Verdict::pass || verdict == Verdict::exact; }
};

/// Deviations at or below this count as exact in the scans.
inline constexpr double kExactFloor = 1e-10;

struct ScanOptions {
  QuadratureSpec spec{};
  unsigned threads = 1;
};

/// int_0^1 u^k sin(2 pi n (1-u)) cot(pi (1-u)) du against 1 (k = 0) or 1/2.
/// Expected |deviation| ~ C/n; the fitted exponent must lie in [0.8, 1.2].
ConvergenceReport theorem1_scan(int k, const std::vector<long>& n_values,
                                const ScanOptions& options = {});

/// int_0^1 (1 - cos(2 pi n (1-u))) cot(pi (1-u)) du against 0; passes when
/// every |value| <= tol.
ConvergenceReport zero_integral_scan(const std::vector<long>& n_values, double tol = 1e-8,
                                     const ScanOptions& options = {});

/// int_0^1 (1-u)^k (1 - cos 2 pi n u) cot(pi u) du - (gamma + log n)/pi against
/// -int_0^1 (u^k - u) cot(pi u) du. Passes when each decade step shrinks the
/// deviation by at least 2x.
ConvergenceReport log_asymptotic_scan(double k, const std::vector<long>& n_values,
                                      const ScanOptions& options = {});

/// |hp_partial_sum(k, b, n) - hp_limit(k, b)| with expected rate k - 1 (+-0.2).
ConvergenceReport hp_limit_scan(int k, Complex b, const std::vector<long>& n_values,
                                const ScanOptions& options = {});

}  // namespace hurzeta
