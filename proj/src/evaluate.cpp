#include "hurzeta/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hurzeta {
namespace {

double largest_term(const EvalBreakdown& e) {
  return std::max({std::abs(e.term_half_bk), std::abs(e.term_polylog_single),
                   std::abs(e.term_polylog_sum), std::abs(e.term_integral)});
}

// Rounding in the assembly scales with the largest term, not with the sum.
double formula_error(const EvalBreakdown& e, double unit_roundoff) {
  return e.integral_error + 64.0 * unit_roundoff * largest_term(e);
}

}  // namespace

std::string_view to_string(Route r) noexcept {
  switch (r) {
    case Route::formula: return "formula";
    case Route::formula_extended: return "formula_extended";
    case Route::series: return "series";
  }
  return "unknown";
}

ZetaValue zeta(int k, Complex b, const RouteOptions& options) {
  const ZetaParams params(k, b);
  ZetaValue out;

  if (params.integer_b()) {
    const double scale = std::pow(b.real(), -k);
    const double tol = std::max(options.rel_target * scale, options.abs_target);
    out.value = hurwitz_series_oracle(k, b, std::max(tol, 1e-300));
    out.error_estimate = tol;
    out.route = Route::series;
    out.notices.emplace_back("integer b routed to the series (q = 1 is a polylog pole)");
    return out;
  }

  // zeta(k, conj b) = conj zeta(k, b); with Im b <= 0 we have |q| <= 1 and the
  // polylog weights stay bounded.
  const bool flip = b.imag() > 0.0;
  const ZetaParams eval_at = flip ? ZetaParams(k, std::conj(b)) : params;
  out.conjugated = flip;

  out.breakdown = hurwitz_zeta(eval_at, options.spec);
  out.error_estimate =
      formula_error(out.breakdown, std::numeric_limits<double>::epsilon());
  const auto target = [&](Complex v) {
    return std::max(options.rel_target * std::abs(v), options.abs_target);
  };
  if (options.allow_extended && out.error_estimate > target(out.breakdown.total)) {
    out.breakdown = hurwitz_zeta_extended(eval_at);
    out.route = Route::formula_extended;
    out.error_estimate = formula_error(out.breakdown, 1e-33) +
                         std::numeric_limits<double>::epsilon() * std::abs(out.breakdown.total);
    out.notices.emplace_back("terms cancel in double; evaluated in 113-bit arithmetic");
  }
  out.value = flip ? std::conj(out.breakdown.total) : out.breakdown.total;
  return out;
}

}  // namespace hurzeta
