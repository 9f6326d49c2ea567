#pragma once

// zeta(k, b) with automatic routing: the series for integer b, the formula in
// double where its terms do not cancel, and the formula in 113-bit arithmetic
// where they do.

#include <string>
#include <string_view>
#include <vector>

#include "hurzeta/hurwitz.hpp"

namespace hurzeta {

enum class Route {
  formula,           // hurwitz_zeta in double
  formula_extended,  // hurwitz_zeta_extended
  series,            // integer b: hurwitz_series_oracle
};

std::string_view to_string(Route r) noexcept;

struct RouteOptions {
  double rel_target = 1e-13;
  double abs_target = 0.0;
  QuadratureSpec spec{};
  bool allow_extended = true;
};

struct ZetaValue {
  Complex value{};
  double error_estimate = 0.0;
  Route route = Route::formula;
  /// Im b > 0 was evaluated at conj(b) and conjugated back.
  bool conjugated = false;
  /// Filled for the formula routes (at the possibly conjugated point).
  EvalBreakdown breakdown;
  std::vector<std::string> notices;
};

/// Throws ErrorKind::domain for k < 2 or b in {0, -1, -2, ...}.
ZetaValue zeta(int k, Complex b, const RouteOptions& options = {});

}  // namespace hurzeta
