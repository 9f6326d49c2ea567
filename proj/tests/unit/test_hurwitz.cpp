#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hurzeta/evaluate.hpp"
#include "hurzeta/hurwitz.hpp"
#include "hurzeta/special_functions.hpp"

using namespace hurzeta;

namespace {

constexpr double kPi = Constants::pi;
const double kSpecial = -16.0 + kPi * kPi + 8.0 * Constants::catalan;  // zeta(2, 5/4)

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// sum_{j>=0} (ij + b)^{-k} = i^{-k} zeta(k, -ib), from the series oracle.
Complex progression_oracle(int k, double b) {
  return i_pow(-k) * hurwitz_series_reference(k, Complex(0.0, -b), 1e-15);
}

}  // namespace

TEST_CASE("series oracle anchors") {
  CHECK(rel(hurwitz_series_oracle(2, 1.0, 1e-10), kPi * kPi / 6) <= 1e-10);
  CHECK(rel(hurwitz_series_oracle(6, 1.0, 1e-12), std::pow(kPi, 6) / 945) <= 1e-12);
  CHECK(std::abs(hurwitz_series_oracle(2, 1.25, 1e-10) - kSpecial) <= 1e-10);
  CHECK_THROWS_AS(hurwitz_series_oracle(2, -0.5), Error);
  CHECK_THROWS_AS(hurwitz_series_oracle(2, 0.5, 1e-30, 1000), Error);
}

TEST_CASE("series reference crosses Re b <= 0") {
  const Complex b(-1.5, 0.3);
  const Complex direct = std::pow(b, -3) + std::pow(b + 1.0, -3) + hurwitz_series_oracle(3, b + 2.0, 1e-15);
  CHECK(rel(hurwitz_series_reference(3, b, 1e-15), direct) <= 1e-13);
}

TEST_CASE("params reject bad input") {
  CHECK_THROWS_AS(ZetaParams(1, 0.5), Error);
  CHECK_THROWS_AS(ZetaParams(2, 0.0), Error);
  CHECK_THROWS_AS(ZetaParams(2, -3.0), Error);
  CHECK(ZetaParams(2, 2.0).integer_b());
  CHECK(ZetaParams(2, 2.0).weights().empty());
}

TEST_CASE("bracket kernel endpoints") {
  for (double b : {0.1, 0.25, 0.7, 1.3, 3.9}) {
    const ZetaParams p(2, b);
    CHECK(std::abs(bracket_kernel(p, 1.0)) == 0.0);
    CHECK(std::abs(bracket_kernel(p, 0.0)) <= 1e-14 * std::abs(p.kernel_at_one()));
  }
  for (int k = 3; k <= 10; ++k) {
    const ZetaParams p(k, Complex(0.6, -0.2));
    CHECK(std::abs(bracket_kernel(p, 0.0)) <= 1e-14 * std::abs(bracket_kernel(p, 0.5)));
  }
  CHECK_THROWS_AS(bracket_kernel(ZetaParams(2, 1.0), 0.5), Error);
}

TEST_CASE("bracket kernel at u = 1/2 from the k = 2 closed forms") {
  const Complex b = 0.25;
  const Complex q = std::exp(Complex(0.0, -2 * kPi) * b);
  const Complex li0 = q / (1.0 - q);
  const Complex li1 = q / ((1.0 - q) * (1.0 - q));
  // j = 1: (1 + Li_0) u, j = 2: Li_{-1}; both over (j-1)!(k-j)! = 1.
  auto B = [&](double u) { return ((1.0 + li0) * u + li1) * std::exp(Complex(0.0, -2 * kPi) * b * u); };
  const Complex expected = B(0.5) - B(1.0);
  CHECK(rel(bracket_kernel(ZetaParams(2, b), 0.5), expected) <= 1e-14);
}

TEST_CASE("real and imaginary parts of the progression") {
  for (auto [k, b] : {std::pair{2, 1.0}, {4, 0.5}, {2, 3.0}, {3, 0.5}, {2, 5.0}}) {
    const Complex oracle = progression_oracle(k, b);
    CHECK(std::abs(real_part_formula(k, b) - oracle.real()) <= 1e-12 * std::abs(oracle));
    CHECK(std::abs(imag_part_integral(k, b) - oracle.imag()) <= 1e-9 * std::abs(oracle));
  }
  // corrections of order (2 pi)^2 e^{-6 pi} for large b
  const double gap = std::abs(real_part_formula(2, 3.0) - 1.0 / 18);
  CHECK(gap > 1e-8);
  CHECK(gap <= 1e-6);
  CHECK_THROWS_AS(real_part_formula(2, -1.0), Error);
}

TEST_CASE("progression brute force") {
  // Re sum_{j<=N} (ij + 1)^{-2} plus the -1/N tail.
  const long n = 200'000;
  const Complex s = hp_partial_sum(2, 1.0, n) + 1.0;
  CHECK(std::abs(s.real() - 1.0 / n - real_part_formula(2, 1.0)) <= 1e-9);
}

TEST_CASE("combined formula") {
  const EvalBreakdown e = hurwitz_zeta(ZetaParams(2, 1.25));
  CHECK(std::abs(e.total - kSpecial) <= 1e-9 * kSpecial);
  CHECK(std::abs(e.total - (e.term_half_bk + e.term_polylog_single + e.term_polylog_sum + e.term_integral)) <= 1e-15);
  CHECK(e.term_half_bk == std::pow(Complex(1.25), -2) / 2.0);

  const Complex b(0.5, 1.0 / 3);
  const Complex oracle = hurwitz_series_reference(3, b, 1e-15);
  CHECK(rel(hurwitz_zeta(ZetaParams(3, b)).total, oracle) <= 1e-9);

  CHECK_THROWS_AS(hurwitz_zeta(ZetaParams(2, 1.0)), Error);
  CHECK_THROWS_AS(hurwitz_zeta(ZetaParams(2, Complex(0.5, 6.0))), Error);
  const EvalBreakdown far = hurwitz_zeta(ZetaParams(2, Complex(12.5, 0.5)));
  CHECK(std::find(far.warnings.begin(), far.warnings.end(), "outside_validated_region") != far.warnings.end());
  const EvalBreakdown steep = hurwitz_zeta(ZetaParams(10, 9.9));
  CHECK(std::find(steep.warnings.begin(), steep.warnings.end(), "terms_cancel") != steep.warnings.end());
}

TEST_CASE("extended precision path") {
  const ZetaParams p(10, 3.75);
  const Complex oracle = hurwitz_series_reference(10, 3.75, 1e-20);
  const EvalBreakdown e = hurwitz_zeta_extended(p);
  CHECK(e.extended_precision);
  CHECK(rel(e.total, oracle) <= 1e-13);
}

TEST_CASE("routed evaluator") {
  const ZetaValue one = zeta(2, 1.0);
  CHECK(one.route == Route::series);
  CHECK(rel(one.value, kPi * kPi / 6) <= 1e-13);
  CHECK_FALSE(one.notices.empty());

  const ZetaValue up = zeta(3, Complex(1.0, 0.5));
  CHECK(up.conjugated);
  CHECK(rel(up.value, hurwitz_series_reference(3, Complex(1.0, 0.5), 1e-16)) <= 1e-12);

  const ZetaValue hard = zeta(10, 3.75);
  CHECK(hard.route == Route::formula_extended);
  CHECK(rel(hard.value, hurwitz_series_reference(10, 3.75, 1e-20)) <= 1e-12);

  CHECK_THROWS_AS(zeta(2, 0.0), Error);
  CHECK_THROWS_AS(zeta(1, 0.5), Error);
}

TEST_CASE("routed evaluator across the validated region") {
  for (double im : {-5.0, -2.5, 2.5, 5.0}) {
    for (double re : {-9.7, 0.3, 9.9}) {
      for (int k : {2, 10}) {
        const Complex b(re, im);
        const ZetaValue z = zeta(k, b);
        CHECK(rel(z.value, hurwitz_series_reference(k, b, 1e-16 * std::abs(z.value))) <= 1e-11);
      }
    }
  }
}

TEST_CASE("partial sums of the progression") {
  CHECK(std::abs(hp_partial_sum(2, 1.0, 1) - Complex(0.0, -0.5)) <= 1e-16);
  CHECK_THROWS_AS(hp_partial_sum(2, Complex(0.0, -3.0), 5), Error);
  const Complex limit = hp_limit(2, 1.0);
  CHECK(std::abs(hp_partial_sum(2, 1.0, 100'000) - limit) <= 2e-5);
  // k = 1: real part settles, imaginary part drifts like -log n.
  const Complex a = hp_partial_sum(1, 1.0, 1000);
  const Complex b = hp_partial_sum(1, 1.0, 100'000);
  CHECK(std::abs(a.real() - b.real()) <= 1e-3);
  CHECK((a.imag() - b.imag()) == doctest::Approx(std::log(100.0)).epsilon(1e-3));
}
