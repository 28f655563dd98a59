#pragma once

// Double-exponential quadrature on (0,1), (a,b) and (0,inf).
//
// All rules are trapezoid sums in a transformed variable s with step
// h = 2^-level. Each level reuses the previous sum and only evaluates the new
// odd nodes; the error estimate is the difference between the last two
// levels. Endpoints are never evaluated, and integrands on (0,1) receive both
// t and 1 - t so that factors like (1 - t)^b stay accurate near t = 1.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "wext/errors.hpp"

namespace wext {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  int max_level = 12;
  std::int64_t max_nodes = std::int64_t{1} << 20;

  void validate() const {
    if (!(rel_tol > 0.0)) throw_domain("QuadratureSpec: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw_domain("QuadratureSpec: abs_tol must be >= 0");
    if (max_level < 3) throw_domain("QuadratureSpec: max_level must be >= 3");
    if (max_nodes < 1) throw_domain("QuadratureSpec: max_nodes must be >= 1");
  }
};

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t nodes_used = 0;
  bool converged = false;
};

namespace detail {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;
// Tail-trimming threshold relative to the running L1 norm.
inline constexpr double kTrimRel = 1e-20;
// Levels below this are always computed; convergence is tested from here on.
inline constexpr int kMinLevel = 3;

// A node of a DE rule: abscissa data handed to the integrand and dx/ds.
struct Node {
  double x;   // abscissa (t on (0,1), x on (0,inf))
  double xc;  // 1 - t on (0,1); 1 on (0,inf)
  double w;   // dx/ds
};

// tanh-sinh: t = 1 / (1 + exp(-2u)), u = (pi/2) sinh s
inline Node tanh_sinh_node(double s) {
  const double u = kHalfPi * std::sinh(s);
  const double e = std::exp(-2.0 * std::fabs(u));
  const double big = 1.0 / (1.0 + e);
  const double small = e / (1.0 + e);
  Node n{};
  n.x = u >= 0.0 ? big : small;
  n.xc = u >= 0.0 ? small : big;
  n.w = kHalfPi * std::cosh(s) * 2.0 * big * small;
  return n;
}

// exp-sinh: x = exp((pi/2) sinh s)
inline Node exp_sinh_node(double s) {
  const double u = kHalfPi * std::sinh(s);
  Node n{};
  n.x = std::exp(u);
  n.xc = 1.0;
  n.w = n.x * kHalfPi * std::cosh(s);
  return n;
}

// Core level-doubling driver for `width` simultaneous integrands sharing
// nodes. `eval(node, out)` writes the integrand values at the node.
template <class NodeFn, class Eval>
std::vector<QuadResult> de_integrate(NodeFn&& node_at, double s_max, Eval&& eval,
                                     std::size_t width, const QuadratureSpec& spec) {
  spec.validate();
  std::vector<double> sum(width, 0.0), prev(width, 0.0), l1(width, 0.0), est(width, 0.0);
  std::vector<double> level_sum(width), level_l1(width), fx(width);
  std::vector<QuadResult> out(width);
  std::int64_t nodes = 0;

  // Window of s still being refined; narrowed after the coarse levels.
  double s_lo = -s_max;
  double s_hi = s_max;
  // |f w| per component for every coarse node, used for trimming.
  std::vector<double> coarse_s, coarse_c;

  for (int level = 0; level <= spec.max_level; ++level) {
    const double h = std::ldexp(1.0, -level);
    std::fill(level_sum.begin(), level_sum.end(), 0.0);
    std::fill(level_l1.begin(), level_l1.end(), 0.0);
    const auto jmax = static_cast<std::int64_t>(std::floor(s_max / h));
    for (std::int64_t j = -jmax; j <= jmax; ++j) {
      if (level > 0 && j % 2 == 0) continue;
      const double s = static_cast<double>(j) * h;
      if (s < s_lo || s > s_hi) continue;
      const Node nd = node_at(s);
      if (!(nd.x > 0.0) || !(nd.xc > 0.0) || !std::isfinite(nd.x)) continue;
      eval(nd, std::span<double>(fx));
      ++nodes;
      if (level < kMinLevel) coarse_s.push_back(s);
      for (std::size_t i = 0; i < width; ++i) {
        if (!std::isfinite(fx[i]))
          throw Error(ErrorCode::NonFinite, "quadrature: non-finite integrand value at abscissa " +
                                                std::to_string(nd.x));
        const double c = fx[i] * nd.w;
        level_sum[i] += c;
        level_l1[i] += std::fabs(c);
        if (level < kMinLevel) coarse_c.push_back(std::fabs(c));
      }
    }
    for (std::size_t i = 0; i < width; ++i) {
      prev[i] = sum[i];
      sum[i] = level == 0 ? level_sum[i] * h : 0.5 * sum[i] + level_sum[i] * h;
      l1[i] = level == 0 ? level_l1[i] * h : 0.5 * l1[i] + level_l1[i] * h;
    }

    if (level == kMinLevel - 1) {
      // Drop the tails where every component is negligible against its L1
      // norm, keeping half a unit step of margin.
      double lo = s_max + 1.0;
      double hi = -s_max - 1.0;
      for (std::size_t k = 0; k < coarse_s.size(); ++k) {
        for (std::size_t i = 0; i < width; ++i) {
          if (coarse_c[k * width + i] > kTrimRel * l1[i]) {
            lo = std::min(lo, coarse_s[k]);
            hi = std::max(hi, coarse_s[k]);
            break;
          }
        }
      }
      s_lo = lo - 0.5;
      s_hi = hi + 0.5;
    }

    if (level >= kMinLevel) {
      bool done = true;
      for (std::size_t i = 0; i < width; ++i) {
        est[i] = std::fabs(sum[i] - prev[i]);
        if (est[i] > std::max(spec.rel_tol * std::fabs(sum[i]), spec.abs_tol)) done = false;
      }
      if (done) {
        for (auto& r : out) r.converged = true;
        break;
      }
    }
    if (nodes >= spec.max_nodes) break;
  }
  for (std::size_t i = 0; i < width; ++i) {
    out[i].value = sum[i];
    out[i].abs_error_estimate = est[i];
    out[i].nodes_used = nodes;
  }
  return out;
}

// Largest |s| for which both t and 1 - t stay well above the smallest
// normal double.
inline constexpr double kTanhSinhSMax = 6.0;
// exp-sinh abscissae span roughly [1e-227, 1e227].
inline constexpr double kExpSinhSMax = 6.5;

}  // namespace detail

/// Batched integration over (0,1). `f(t, 1 - t, out)` fills one value per
/// component; all components share nodes and refinement stops when every
/// component meets the tolerance.
template <class F>
std::vector<QuadResult> integrate_01_batch(F&& f, std::size_t width,
                                           const QuadratureSpec& spec = {}) {
  return detail::de_integrate(
      detail::tanh_sinh_node, detail::kTanhSinhSMax,
      [&](const detail::Node& nd, std::span<double> out) { f(nd.x, nd.xc, out); }, width, spec);
}

/// Integrates f over (0,1). `f` takes (t, 1 - t); both are exact at every
/// node, so endpoint factors can be formed without cancellation.
template <class F>
QuadResult integrate_01(F&& f, const QuadratureSpec& spec = {}) {
  return detail::de_integrate(
      detail::tanh_sinh_node, detail::kTanhSinhSMax,
      [&](const detail::Node& nd, std::span<double> out) { out[0] = f(nd.x, nd.xc); }, 1,
      spec)[0];
}

/// Integrates f over (a,b) by the affine map u = a + (b - a) t.
/// `f` takes (u, u - a, b - u).
template <class F>
QuadResult integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (!(b > a)) throw_domain("integrate_finite: requires b > a");
  const double len = b - a;
  QuadResult r = integrate_01(
      [&](double t, double tc) {
        const double da = len * t;
        const double db = len * tc;
        const double u = t <= 0.5 ? a + da : b - db;
        return f(u, da, db);
      },
      spec);
  r.value *= len;
  r.abs_error_estimate *= len;
  return r;
}

/// Integrates f over (0, inf) with the exp-sinh rule.
template <class F>
QuadResult integrate_semi_inf(F&& f, const QuadratureSpec& spec = {}) {
  return detail::de_integrate(
      detail::exp_sinh_node, detail::kExpSinhSMax,
      [&](const detail::Node& nd, std::span<double> out) { out[0] = f(nd.x); }, 1, spec)[0];
}

/// Integrates f over (0, inf) as (0, split] by tanh-sinh plus [split, inf)
/// by exp-sinh. Used when the integrand spikes near 0.
template <class F>
QuadResult integrate_semi_inf_split(F&& f, double split, const QuadratureSpec& spec = {}) {
  if (!(split > 0.0)) throw_domain("integrate_semi_inf_split: split must be > 0");
  QuadResult head = integrate_01([&](double t, double) { return f(split * t); }, spec);
  QuadResult tail = integrate_semi_inf([&](double y) { return f(split + y); }, spec);
  QuadResult r;
  r.value = split * head.value + tail.value;
  r.abs_error_estimate = split * head.abs_error_estimate + tail.abs_error_estimate;
  r.nodes_used = head.nodes_used + tail.nodes_used;
  r.converged = head.converged && tail.converged;
  return r;
}

}  // namespace wext
