#pragma once

// Generating function f(x, b) = sum_{k>=2} x^k (zeta(k, b) - b^{-k}) and its
// closed-form continuation, which splits into four branches by the arithmetic
// type of b. Also the odd-zeta integral representation and the sinh kernel
// behind it.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurzeta/common.hpp"
#include "hurzeta/quadrature.hpp"

namespace hurzeta {

enum class GenFunBranch {
  generic,              // 2b not an integer
  b_zero,
  b_pos_int,
  b_neg_int,
  half_int_unsupported, // 2b odd: no closed form
};

std::string_view to_string(GenFunBranch b) noexcept;

/// Integer-membership tolerance for classifying b.
inline constexpr double kIntEps = 1e-9;
/// Evaluations closer than this to a singular locus of the closed form are refused.
inline constexpr double kSingularGuard = 1e-6;

struct GenFunCase {
  GenFunBranch tag = GenFunBranch::generic;
  /// The branch integer for b_zero / b_pos_int / b_neg_int.
  long b_int = 0;
  /// 2b lies within [kIntEps, kSingularGuard) of an integer: evaluated on the
  /// generic branch, but expect cancellation.
  bool near_branch_boundary = false;

  // Distances to the loci where individual terms of the closed form blow up.
  // Not every locus matters for every branch; see singular_loci().
  double dist_x_minus_b = 0.0;       // |x - b|
  double dist_2b_int = 0.0;          // 2b to Z
  double dist_2x_minus_b_int = 0.0;  // 2(x - b) to Z
  double dist_2x_int = 0.0;          // 2x to Z  (sin 2 pi x, cot pi x)
  double dist_x_int = 0.0;           // x to Z   (sin pi x)
  double dist_x_minus_b_int = 0.0;   // x - b to Z (sin pi (x - b))

  /// (locus name, distance) pairs that are relevant for this branch.
  std::vector<std::pair<std::string, double>> singular_loci() const;
};

GenFunCase classify_case(Complex x, Complex b);

struct GenFunEval {
  Complex x{};
  Complex b{};
  GenFunCase gcase;
  Complex rational_term{};  // x^2 / (2b(x - b)), 1/2 for b = 0, +1 for b < 0 integer
  Complex trig_term{};      // -pi x sin(pi x) csc(pi (x - b)) / (2 sin pi b), or -(pi x / 2) cot pi x
  Complex integral_term{};  // -pi x int_0^1 (...) cot(pi u) du
  Complex total{};
  QuadratureResult quadrature;
  std::vector<std::string> warnings;
};

/// Closed form of f(x, b). Throws ErrorKind::unsupported for half-integer b
/// and ErrorKind::ill_conditioned within kSingularGuard of a singular locus.
GenFunEval genfun_closed(Complex x, Complex b, const QuadratureSpec& spec = {});

/// Radius of convergence of the x-series: min |j + b| over j >= 1, j + b != 0.
double genfun_radius(Complex b);

/// Coefficient of x^k: sum_{j>=1, j+b != 0} (j + b)^{-k}. Equals
/// zeta(k, b) - b^{-k} whenever b is not a pole.
Complex genfun_coefficient(int k, Complex b, double tol);

struct SeriesSum {
  Complex value{};
  double tail_bound = 0.0;  // bound on the omitted terms k > kmax
  int kmax = 0;
};

/// sum_{k=2}^{kmax} x^k c_k(b). Requires |x| < (1 - margin) r(b), else
/// ErrorKind::divergence.
SeriesSum genfun_series(Complex x, Complex b, int kmax, double margin = 0.1);

/// zeta(2j + 1), 1 <= j <= 10, from its cot-weighted integral representation
/// with Bernoulli-number polynomial integrand.
double odd_zeta_integral(int j, const QuadratureSpec& spec = {});

/// c sinh(cu) / sinh(c). Throws ErrorKind::domain on c = i pi m.
Complex sinh_kernel(Complex c, double u);

/// sum_{j=0}^{terms-1} c^{2j+1} sum_{p=0}^{j} B_{2p}(2 - 2^{2p}) u^{2j-2p+1} / ((2p)! (2j-2p+1)!),
/// the power series of sinh_kernel in c.
Complex sinh_kernel_series(Complex c, double u, int terms);

/// Smallest term count for which the series tail is below tol, assuming
/// |c| < pi (the series radius).
int sinh_kernel_terms_for(Complex c, double tol);

struct TaylorRecovery {
  Complex value{};               // 1/b^k + k-th coefficient at `radius`
  Complex value_half_radius{};   // the same from the circle of radius / 2
  double relative_spread = 0.0;  // |value - value_half_radius| / |value|
  std::vector<std::string> warnings;
};

/// zeta(k, b) = 1/b^k + f^{(k)}(0) / k!, with the Taylor coefficient taken by
/// averaging f(x) x^{-k} over `nodes` equispaced points on |x| = radius.
TaylorRecovery zeta_from_genfun(int k, Complex b, double radius, int nodes,
                                const QuadratureSpec& spec = {});

/// Real and imaginary parts of sum_{k>=2} x^k sum_{j>=1} (ij + b)^{-k} for
/// real x, b: exponential-form real part and sinh-kernel integral imaginary part.
std::pair<double, double> genfun_parts_real_imag(double x, double b,
                                                 const QuadratureSpec& spec = {});

}  // namespace hurzeta
