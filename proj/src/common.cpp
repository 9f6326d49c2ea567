#include "hurzeta/common.hpp"

#include <array>

namespace hurzeta {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::ill_conditioned: return "ill_conditioned";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::range: return "range";
    case ErrorKind::evaluation: return "evaluation";
  }
  return "unknown";
}

Complex ipow(Complex z, int n) noexcept {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex result{1.0, 0.0};
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

Complex two_pi_i_pow(int k) noexcept {
  constexpr double two_pi = 6.28318530717958647693;
  return std::pow(two_pi, k) * i_pow(k);
}

Complex expm1(Complex z) noexcept {
  const double x = z.real();
  const double y = z.imag();
  const double half_sin = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

double factorial(int n) {
  static const auto table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  if (n < 0 || n >= static_cast<int>(table.size())) {
    throw Error(ErrorKind::range, "factorial argument out of double range: " + std::to_string(n));
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace hurzeta
