#pragma once

// Scalar traits shared by the double and 113-bit (float128) code paths.

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace hurzeta::detail {

using Quad = boost::multiprecision::float128;

template <class T>
struct ComplexOf;
template <>
struct ComplexOf<double> {
  using type = std::complex<double>;
};
template <>
struct ComplexOf<Quad> {
  using type = boost::multiprecision::complex128;
};

template <class T>
using Cx = typename ComplexOf<T>::type;

template <class T>
T from_decimal(const char* text);
template <>
inline double from_decimal<double>(const char* text) {
  return std::strtod(text, nullptr);
}
template <>
inline Quad from_decimal<Quad>(const char* text) {
  return Quad(text);
}

template <class T>
inline const T& pi() {
  static const T value = from_decimal<T>("3.14159265358979323846264338327950288419716939937510");
  return value;
}

template <class T>
inline T epsilon() {
  return std::numeric_limits<T>::epsilon();
}

inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(const Quad& x) { return boost::multiprecision::isfinite(x); }

template <class T>
inline bool finite(const Cx<T>& z) {
  return finite(z.real()) && finite(z.imag());
}

inline double to_double(double x) { return x; }
inline double to_double(const Quad& x) { return x.convert_to<double>(); }

template <class T>
inline std::complex<double> to_complex_double(const Cx<T>& z) {
  return {to_double(T(z.real())), to_double(T(z.imag()))};
}

template <class T>
inline Cx<T> from_complex_double(std::complex<double> z) {
  return Cx<T>(T(z.real()), T(z.imag()));
}

template <class T>
inline T magnitude(const Cx<T>& z) {
  using std::abs;
  return T(abs(z));
}

template <class T>
inline Cx<T> ipow_t(Cx<T> z, int n) {
  if (n < 0) return Cx<T>(T(1), T(0)) / ipow_t<T>(z, -n);
  Cx<T> result(T(1), T(0));
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

}  // namespace hurzeta::detail
