#include "hurzeta/quadrature.hpp"

#include <algorithm>

#include "hurzeta/detail/quadrature_t.hpp"

namespace hurzeta {
namespace {

QuadratureResult to_public(detail::BasicQuadResult<double>&& r) {
  QuadratureResult out;
  out.value = r.value;
  out.error_estimate = r.error;
  out.evaluations = r.evaluations;
  out.converged = r.converged;
  out.warnings = std::move(r.warnings);
  return out;
}

detail::IntegrandT<double> adapt(const Integrand& f) {
  return [&f](const double& u) { return f(u); };
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw Error(ErrorKind::domain, "quadrature tolerances must be positive");
  }
  if (max_subdivisions < 0) {
    throw Error(ErrorKind::domain, "max_subdivisions must be nonnegative");
  }
  if (!(endpoint_margin > 0.0) || !(endpoint_margin < 0.25)) {
    throw Error(ErrorKind::domain, "endpoint_margin must lie in (0, 0.25)");
  }
  if (!(endpoint_tol > 0.0)) {
    throw Error(ErrorKind::domain, "endpoint_tol must be positive");
  }
}

std::string_view to_string(QuadWarning w) noexcept {
  switch (w) {
    case QuadWarning::budget_exhausted: return "budget_exhausted";
    case QuadWarning::roundoff_limited: return "roundoff_limited";
    case QuadWarning::endpoint_residual: return "endpoint_residual";
  }
  return "unknown";
}

bool QuadratureResult::has_warning(QuadWarning w) const noexcept {
  return std::find(warnings.begin(), warnings.end(), w) != warnings.end();
}

QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec, long initial_panels) {
  return to_public(detail::integrate_interval_t<double>(adapt(f), a, b, spec, initial_panels));
}

QuadratureResult integrate_open(const Integrand& f, const QuadratureSpec& spec) {
  return integrate_interval(f, 0.0, 1.0, spec);
}

QuadratureResult integrate_oscillatory(const Integrand& f, long n, const QuadratureSpec& spec) {
  if (n < 1) throw Error(ErrorKind::domain, "oscillation count n must be >= 1");
  return integrate_interval(f, 0.0, 1.0, spec, 4 * n);
}

QuadratureResult integrate_cot_weighted(const Integrand& g, const QuadratureSpec& spec) {
  return to_public(detail::integrate_cot_weighted_t<double>(adapt(g), spec));
}

}  // namespace hurzeta
