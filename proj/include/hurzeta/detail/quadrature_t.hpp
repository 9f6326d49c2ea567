#pragma once

// Adaptive Gauss-Kronrod (7/15) machinery, generic over the real type so the
// same rules serve double and float128 evaluation.

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <sstream>
#include <utility>
#include <vector>

#include "hurzeta/detail/scalar.hpp"
#include "hurzeta/quadrature.hpp"

namespace hurzeta::detail {

template <class T>
struct BasicQuadResult {
  Cx<T> value{};
  T error{0};
  long evaluations = 0;
  bool converged = false;
  std::vector<QuadWarning> warnings;
};

template <class T>
using IntegrandT = std::function<Cx<T>(const T&)>;

template <class T>
struct KronrodRule {
  std::array<T, 8> xgk;
  std::array<T, 8> wgk;
  std::array<T, 4> wg;

  static const KronrodRule& get() {
    static const KronrodRule rule = [] {
      constexpr std::array<const char*, 8> xgk = {
          "0.991455371120812639206854697526329", "0.949107912342758524526189684047851",
          "0.864864423359769072789712788640926", "0.741531185599394439863864773280788",
          "0.586087235467691130294144845693013", "0.405845151377397166906606412076961",
          "0.207784955007898467600689403773245", "0"};
      constexpr std::array<const char*, 8> wgk = {
          "0.022935322010529224963732008058970", "0.063092092629978553290700663189204",
          "0.104790010322250183839876322541518", "0.140653259715525918745189590510238",
          "0.169004726639267902826583426598550", "0.190350578064785409913256402421014",
          "0.204432940075298892414161999234649", "0.209482141084727828012999174891714"};
      constexpr std::array<const char*, 4> wg = {
          "0.129484966168869693270611432679082", "0.279705391489276667901467771423780",
          "0.381830050505118944950369775488975", "0.417959183673469387755102040816327"};
      KronrodRule r;
      for (std::size_t i = 0; i < 8; ++i) {
        r.xgk[i] = from_decimal<T>(xgk[i]);
        r.wgk[i] = from_decimal<T>(wgk[i]);
      }
      for (std::size_t i = 0; i < 4; ++i) r.wg[i] = from_decimal<T>(wg[i]);
      return r;
    }();
    return rule;
  }
};

template <class T>
struct PanelT {
  T a{0};
  T b{0};
  Cx<T> value{};
  T error{0};
  bool frozen = false;  // error already at the rounding floor
};

template <class T>
Cx<T> checked_eval(const IntegrandT<T>& f, const T& u) {
  Cx<T> v = f(u);
  if (!finite<T>(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand is not finite at u = " << to_double(u);
    throw Error(ErrorKind::evaluation, msg.str());
  }
  return v;
}

template <class T>
PanelT<T> gauss_kronrod15(const IntegrandT<T>& f, const T& a, const T& b) {
  using std::abs;
  using std::min;
  using std::pow;
  const auto& rule = KronrodRule<T>::get();
  const T center = (a + b) / 2;
  const T half = (b - a) / 2;

  std::array<Cx<T>, 7> fv1{};
  std::array<Cx<T>, 7> fv2{};
  const Cx<T> fc = checked_eval<T>(f, center);
  Cx<T> res_gauss = fc * rule.wg[3];
  Cx<T> res_kronrod = fc * rule.wgk[7];
  T res_abs = rule.wgk[7] * magnitude<T>(fc);

  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const T absc = half * rule.xgk[jtw];
    const Cx<T> f1 = checked_eval<T>(f, T(center - absc));
    const Cx<T> f2 = checked_eval<T>(f, T(center + absc));
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    res_gauss += (f1 + f2) * rule.wg[j];
    res_kronrod += (f1 + f2) * rule.wgk[jtw];
    res_abs += rule.wgk[jtw] * (magnitude<T>(f1) + magnitude<T>(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const T absc = half * rule.xgk[jtwm1];
    const Cx<T> f1 = checked_eval<T>(f, T(center - absc));
    const Cx<T> f2 = checked_eval<T>(f, T(center + absc));
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    res_kronrod += (f1 + f2) * rule.wgk[jtwm1];
    res_abs += rule.wgk[jtwm1] * (magnitude<T>(f1) + magnitude<T>(f2));
  }

  const Cx<T> mean = res_kronrod * T(0.5);
  T res_asc = rule.wgk[7] * magnitude<T>(fc - mean);
  for (int j = 0; j < 7; ++j) {
    res_asc += rule.wgk[j] * (magnitude<T>(fv1[j] - mean) + magnitude<T>(fv2[j] - mean));
  }

  const T width = abs(half);
  res_abs *= width;
  res_asc *= width;
  T err = magnitude<T>((res_kronrod - res_gauss) * half);
  if (res_asc != 0 && err != 0) {
    const T ratio = T(200) * err / res_asc;
    err = res_asc * min(T(1), T(pow(ratio, T(1.5))));
  }
  bool at_floor = false;
  const T eps = epsilon<T>();
  if (res_abs > std::numeric_limits<T>::min() / (T(50) * eps)) {
    const T floor = T(50) * eps * res_abs;
    if (err <= floor) {
      err = floor;
      at_floor = true;
    }
  }
  return PanelT<T>{a, b, res_kronrod * half, err, at_floor};
}

template <class T>
Cx<T> compensated_sum(const std::vector<PanelT<T>>& panels) {
  Cx<T> sum{};
  Cx<T> comp{};
  for (const auto& p : panels) {
    const Cx<T> y = p.value - comp;
    const Cx<T> t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

template <class T>
BasicQuadResult<T> integrate_interval_t(const IntegrandT<T>& f, const T& a, const T& b,
                                        const QuadratureSpec& spec, long initial_panels) {
  using std::max;
  spec.validate();
  if (initial_panels < 1) initial_panels = 1;
  const T rel_tol(spec.rel_tol);
  const T abs_tol(spec.abs_tol);

  std::vector<PanelT<T>> panels;
  panels.reserve(static_cast<std::size_t>(initial_panels + spec.max_subdivisions + 1));
  const T width = (b - a) / T(initial_panels);
  for (long i = 0; i < initial_panels; ++i) {
    const T lo = a + width * T(i);
    const T hi = (i + 1 == initial_panels) ? b : T(a + width * T(i + 1));
    panels.push_back(gauss_kronrod15<T>(f, lo, hi));
  }

  BasicQuadResult<T> result;
  result.evaluations = 15 * initial_panels;

  auto by_error = [&panels](std::size_t lhs, std::size_t rhs) {
    return panels[lhs].error < panels[rhs].error;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)> queue(by_error);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    if (!panels[i].frozen) queue.push(i);
  }

  auto totals = [&panels] {
    T err{0};
    for (const auto& p : panels) err += p.error;
    return std::pair<Cx<T>, T>{compensated_sum<T>(panels), err};
  };

  auto [value, error] = totals();
  int subdivisions = 0;
  bool roundoff = false;
  while (true) {
    const T tol = max(T(rel_tol * magnitude<T>(value)), abs_tol);
    if (error <= tol) break;
    if (queue.empty()) {
      roundoff = true;
      break;
    }
    if (subdivisions >= spec.max_subdivisions) {
      result.warnings.push_back(QuadWarning::budget_exhausted);
      break;
    }
    const std::size_t worst = queue.top();
    queue.pop();
    const PanelT<T> parent = panels[worst];
    const T mid = (parent.a + parent.b) / 2;
    if (!(mid > parent.a && mid < parent.b)) {
      panels[worst].frozen = true;
      continue;
    }
    PanelT<T> left = gauss_kronrod15<T>(f, parent.a, mid);
    PanelT<T> right = gauss_kronrod15<T>(f, mid, parent.b);
    result.evaluations += 30;
    ++subdivisions;

    value += (left.value + right.value) - parent.value;
    error += (left.error + right.error) - parent.error;
    panels[worst] = left;
    panels.push_back(right);
    if (!left.frozen) queue.push(worst);
    if (!right.frozen) queue.push(panels.size() - 1);
    if (subdivisions % 64 == 0) std::tie(value, error) = totals();
  }

  std::tie(value, error) = totals();
  result.value = value;
  result.error = error;
  result.converged = error <= max(T(rel_tol * magnitude<T>(value)), abs_tol);
  if (roundoff && !result.converged) result.warnings.push_back(QuadWarning::roundoff_limited);
  return result;
}

// cot(pi u) with the reflection for u > 1/2 so that 1 - u is exact.
template <class T>
T cot_pi(const T& u) {
  using std::cos;
  using std::sin;
  if (u > T(0.5)) return -cot_pi<T>(T(1 - u));
  const T x = pi<T>() * u;
  return T(cos(x) / sin(x));
}

// cancellation_floor: magnitude of the terms whose difference forms g, if g
// is computed by subtraction. Endpoint values within rounding of it are noise.
template <class T>
BasicQuadResult<T> integrate_cot_weighted_t(const IntegrandT<T>& g, const QuadratureSpec& spec,
                                            const T& cancellation_floor = T(0)) {
  using std::log;
  using std::max;
  spec.validate();
  const T eps = epsilon<T>();

  T scale{0};
  for (int i = 1; i <= 9; ++i) {
    scale = max(scale, magnitude<T>(checked_eval<T>(g, T(T(i) / 10))));
  }
  const T g0 = magnitude<T>(checked_eval<T>(g, T(0)));
  const T g1 = magnitude<T>(checked_eval<T>(g, T(1)));
  const T noise = T(64) * eps * cancellation_floor;
  const T limit = max(T(T(spec.endpoint_tol) * scale), noise);
  if (g0 > limit || g1 > limit) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "cot-weighted integral diverges: |g(0)| = " << to_double(g0)
        << ", |g(1)| = " << to_double(g1) << " vs scale " << to_double(scale)
        << " (g must vanish at both endpoints)";
    throw Error(ErrorKind::divergence, msg.str());
  }

  const T lo(spec.endpoint_margin);
  const T hi = T(1) - lo;

  BasicQuadResult<T> interior = integrate_interval_t<T>(
      [&g](const T& u) { return Cx<T>(g(u) * cot_pi<T>(u)); }, lo, hi, spec, 1);

  // Local linear model g(u) ~ slope * u on [0, m]: the pole part integrates
  // to slope * m / pi, the analytic remainder cot(pi u) - 1/(pi u) ~ -pi u / 3
  // to -slope * pi * m^3 / 9.
  auto endpoint_piece = [&g, eps](const T& margin, bool right_end, T& err) {
    std::array<T, 3> offsets{};
    std::array<Cx<T>, 3> values{};
    for (int i = 0; i < 3; ++i) {
      const T nominal = margin * T(i + 1) / T(3);
      if (right_end) {
        const T u = T(1) - nominal;
        offsets[i] = T(1) - u;
        values[i] = checked_eval<T>(g, u);
      } else {
        offsets[i] = nominal;
        values[i] = checked_eval<T>(g, nominal);
      }
    }
    T denom{0};
    Cx<T> num{};
    for (int i = 0; i < 3; ++i) {
      denom += offsets[i] * offsets[i];
      num += values[i] * offsets[i];
    }
    const Cx<T> slope = num / denom;
    T misfit{0};
    for (int i = 0; i < 3; ++i) {
      misfit = max(misfit, magnitude<T>(values[i] - slope * offsets[i]));
    }
    const T m = offsets[2];
    const T& p = pi<T>();
    err = misfit * m / p + T(4) * eps * magnitude<T>(slope) * m;
    const Cx<T> piece = slope * T(m / p - p * m * m * m / T(9));
    // cot(pi (1 - v)) = -cot(pi v)
    return right_end ? Cx<T>(-piece) : piece;
  };

  T err_left{0};
  T err_right{0};
  const Cx<T> left = endpoint_piece(lo, false, err_left);
  const Cx<T> right = endpoint_piece(T(1 - hi), true, err_right);

  BasicQuadResult<T> out = interior;
  out.value = interior.value + left + right;
  out.error = interior.error + err_left + err_right;
  // A nonzero endpoint value is treated as noise spread over the whole
  // integrand; its worst case against |cot| is about 2 log(1/m) / pi.
  out.error += max(g0, g1) * T(2) * log(T(1) / lo) / pi<T>();
  out.evaluations = interior.evaluations + 9 + 2 + 6;
  out.converged =
      out.error <= max(T(T(spec.rel_tol) * magnitude<T>(out.value)), T(spec.abs_tol));
  if (!out.converged && interior.converged) {
    out.warnings.push_back(QuadWarning::roundoff_limited);
  }
  const T residual_floor = max(T(T(64) * eps * scale), noise);
  if (g0 > residual_floor || g1 > residual_floor) {
    out.warnings.push_back(QuadWarning::endpoint_residual);
  }
  return out;
}

}  // namespace hurzeta::detail
