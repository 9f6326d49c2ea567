#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hurzeta {

using Complex = std::complex<double>;

enum class ErrorKind {
  domain,           // argument sits on a pole or outside the function's domain
  capacity,         // a table or term budget is too small for the request
  unsupported,      // parameter combination the method does not cover
  ill_conditioned,  // too close to a (removable) singularity of the formula
  divergence,       // an integral or series would diverge
  range,            // intermediate values leave double range
  evaluation,       // integrand produced a non-finite value
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// i^k for integer k, exact (no rounding dust from complex pow).
inline Complex i_pow(int k) noexcept {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// (2*pi*i)^k as (2*pi)^k times the exact quadrant factor.
Complex two_pi_i_pow(int k) noexcept;

/// z^n by binary powering; n may be negative.
Complex ipow(Complex z, int n) noexcept;

/// Distance from z to the nearest integer (on the real axis).
inline double dist_to_int(Complex z) noexcept {
  return std::abs(z - std::round(z.real()));
}

/// exp(z) - 1 without cancellation for small |z|.
Complex expm1(Complex z) noexcept;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double factorial(int n);

}  // namespace hurzeta
