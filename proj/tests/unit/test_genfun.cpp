#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hurzeta/genfun.hpp"
#include "hurzeta/hurwitz.hpp"
#include "hurzeta/special_functions.hpp"

using namespace hurzeta;

namespace {

constexpr double kPi = Constants::pi;
const double kSpecial = -16.0 + kPi * kPi + 8.0 * Constants::catalan;

// sum_{j>=1, j+b != 0} x^2 / ((j+b)(j+b-x)), summed to N with the integral tail.
Complex partial_fractions(Complex x, Complex b, long n = 200'000) {
  Complex s = 0;
  for (long j = 1; j <= n; ++j) {
    const Complex c = static_cast<double>(j) + b;
    if (std::abs(c) == 0.0) continue;
    s += x * x / (c * (c - x));
  }
  const Complex c = static_cast<double>(n) + 0.5 + b;
  return s + x * std::log(c / (c - x));
}

// Same along the imaginary progression ij + b.
Complex partial_fractions_imag(double x, double b, long n = 400'000) {
  Complex s = 0;
  for (long j = 1; j <= n; ++j) {
    const Complex c(b, static_cast<double>(j));
    s += x * x / (c * (c - x));
  }
  const Complex c(b, n + 0.5);
  return s + Complex(0.0, 1.0) * x * (std::log(c - x) - std::log(c));
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("branch classification") {
  CHECK(classify_case(0.3, 0.7).tag == GenFunBranch::generic);
  CHECK(classify_case(0.3, 0.0).tag == GenFunBranch::b_zero);
  CHECK(classify_case(0.3, 0.5).tag == GenFunBranch::half_int_unsupported);
  CHECK(classify_case(0.3, -1.5).tag == GenFunBranch::half_int_unsupported);
  const GenFunCase pos = classify_case(0.3, 2.0);
  CHECK(pos.tag == GenFunBranch::b_pos_int);
  CHECK(pos.b_int == 2);
  CHECK(classify_case(0.3, -3.0).tag == GenFunBranch::b_neg_int);
  CHECK(classify_case(0.3, Complex(1.0, 0.2)).tag == GenFunBranch::generic);
  CHECK(classify_case(0.3, 0.7 + 1e-7).near_branch_boundary == false);
  CHECK(classify_case(0.3, 1.0 + 1e-7).near_branch_boundary);
}

TEST_CASE("closed form against partial fractions") {
  const std::vector<std::pair<Complex, Complex>> pts = {
      {0.3, 0.7},          {0.2, 1.0},  {0.4, 0.0}, {0.3, -2.0},
      {{0.1, 0.05}, {0.6, -0.2}}, {1.7, 0.35}, {-0.75, 2.2}, {0.25, -1.0}};
  for (auto [x, b] : pts) {
    const GenFunEval e = genfun_closed(x, b);
    CHECK(std::abs(e.total - partial_fractions(x, b)) <= 1e-9);
    CHECK(std::abs(e.total - (e.rational_term + e.trig_term + e.integral_term)) <= 1e-15);
  }
}

TEST_CASE("closed form against the series") {
  CHECK(std::abs(genfun_closed({0.1, 0.05}, {0.6, -0.2}).total -
                 genfun_series({0.1, 0.05}, {0.6, -0.2}, 120).value) <= 1e-6);
  // coefficients zeta(k) - 1 from the oracle, 60 terms
  Complex s = 0;
  for (int k = 2; k <= 60; ++k) s += std::pow(0.2, k) * (hurwitz_series_oracle(k, 1.0, 1e-16) - 1.0);
  CHECK(std::abs(genfun_closed(0.2, 1.0).total - s) <= 1e-12);
}

TEST_CASE("x = 2b makes the integral vanish") {
  const GenFunEval e = genfun_closed(0.6, 0.3);
  CHECK(std::abs(e.integral_term) <= 1e-12);
  CHECK(std::abs(e.total - (e.rational_term + e.trig_term)) <= 1e-12);
  CHECK(has(e.warnings, "x_equals_2b_integral_vanishes"));
}

TEST_CASE("closed form refusals") {
  try {
    genfun_closed(0.3, 0.5);
    FAIL("expected unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }
  try {
    genfun_closed(0.7, 0.7);  // x = b
    FAIL("expected ill_conditioned");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ill_conditioned);
  }
  CHECK(genfun_closed(0.0, 0.7).total == Complex(0.0, 0.0));
}

TEST_CASE("series basics") {
  CHECK(genfun_series(0.0, 0.7, 120).value == Complex(0.0, 0.0));
  CHECK(std::abs(genfun_series(0.5, 1.0, 120).value - partial_fractions(0.5, 1.0)) <= 1e-10);
  CHECK(std::abs(genfun_series(0.3, 2.0, 80).value - partial_fractions(0.3, 2.0)) <= 1e-10);
  CHECK(genfun_radius(0.7) == doctest::Approx(1.7));
  CHECK(genfun_radius(-2.0) == doctest::Approx(1.0));
  CHECK(genfun_radius(-2.3) == doctest::Approx(0.3));
  CHECK_THROWS_AS(genfun_series(1.6, 0.7, 120), Error);
  const SeriesSum s = genfun_series(0.3, 0.7, 20);
  CHECK(std::abs(s.value - partial_fractions(0.3, 0.7)) <= s.tail_bound + 1e-12);
}

TEST_CASE("coefficients") {
  CHECK(std::abs(genfun_coefficient(3, 0.7, 1e-15) -
                 (hurwitz_series_oracle(3, 0.7, 1e-16) - std::pow(0.7, -3))) <= 1e-13);
  // b = -2 skips the j = 2 pole.
  const Complex c = genfun_coefficient(2, -2.0, 1e-15);
  CHECK(std::abs(c - (1.0 + kPi * kPi / 6)) <= 1e-13);
}

TEST_CASE("odd zeta from the integral") {
  CHECK(odd_zeta_integral(1) == doctest::Approx(1.2020569031595943).epsilon(1e-12));
  CHECK(odd_zeta_integral(2) == doctest::Approx(1.0369277551433699).epsilon(1e-12));
  CHECK(odd_zeta_integral(3) == doctest::Approx(1.0083492773819228).epsilon(1e-12));
  CHECK_THROWS_AS(odd_zeta_integral(0), Error);
}

TEST_CASE("sinh kernel") {
  CHECK(std::abs(sinh_kernel(1.0, 0.5) - std::sinh(0.5) / std::sinh(1.0)) <= 1e-15);
  // kernel / c -> u as c -> 0
  const Complex c = 1e-6;
  CHECK(std::abs(sinh_kernel(c, 0.3) / c - 0.3) <= 1e-9);
  CHECK_THROWS_AS(sinh_kernel(Complex(0.0, kPi), 0.5), Error);
  const int j = sinh_kernel_terms_for(2.0, 1e-12);
  CHECK(std::abs(sinh_kernel_series(2.0, 0.3, j) - sinh_kernel(2.0, 0.3)) <= 1e-10);
  CHECK(sinh_kernel_terms_for(0.5, 1e-12) < sinh_kernel_terms_for(2.5, 1e-12));
}

TEST_CASE("zeta from Taylor coefficients") {
  const TaylorRecovery a = zeta_from_genfun(2, 1.25, 0.3, 32);
  CHECK(std::abs(a.value - kSpecial) <= 1e-6);
  CHECK(a.relative_spread <= 1e-6);
  const TaylorRecovery b = zeta_from_genfun(2, 0.7, 0.25, 32);
  CHECK(std::abs(b.value - hurwitz_series_oracle(2, 0.7, 1e-15)) <= 1e-6);
  const TaylorRecovery c = zeta_from_genfun(3, 1.0, 0.3, 48);
  CHECK(std::abs(c.value - 1.2020569031595943) <= 1e-6);
}

TEST_CASE("real and imaginary parts on the imaginary progression") {
  const auto [re, im] = genfun_parts_real_imag(0.2, 0.45);
  const Complex brute = partial_fractions_imag(0.2, 0.45);
  CHECK(std::abs(re - brute.real()) <= 1e-9);
  CHECK(std::abs(im - brute.imag()) <= 1e-9);

  const auto [re0, im0] = genfun_parts_real_imag(0.0, 0.45);
  CHECK(re0 == 0.0);
  CHECK(im0 == 0.0);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xs(-0.6, 0.6);
  std::uniform_real_distribution<double> bs(0.1, 3.0);
  for (int i = 0; i < 10; ++i) {
    const double x = xs(rng);
    const double b = bs(rng);
    const auto [r, m] = genfun_parts_real_imag(x, b);
    // sum_j x^2/((ij+b)(ij+b-x)) is the generating function at (-ix, -ib).
    const Complex closed = genfun_closed(Complex(0.0, -x), Complex(0.0, -b)).total;
    CHECK(std::abs(Complex(r, m) - closed) <= 1e-8);
  }
}

TEST_CASE("generic branch near integer b (logged)") {
  // For b = m + eps the generic value should approach the integer-branch value.
  // For m < 0 the generic sum still holds the j = -m term, which the integer
  // branch skips; it is removed before comparing.
  for (long m : {0L, 1L, 2L, -1L, -2L}) {
    const double x = 0.3;
    const Complex at = genfun_closed(x, static_cast<double>(m)).total;
    std::string line = "b -> " + std::to_string(m) + ":";
    for (double eps : {1e-3, 1e-4, 1e-5, 1e-6}) {
      const Complex b = static_cast<double>(m) + eps;
      Complex generic = genfun_closed(x, b).total;
      if (m < 0) {
        const Complex c = static_cast<double>(-m) + b;
        generic -= x * x / (c * (c - x));
      }
      const double gap = std::abs(generic - at);
      CHECK(std::isfinite(gap));
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.2e", gap);
      line += buf;
    }
    MESSAGE(line);
  }
}
