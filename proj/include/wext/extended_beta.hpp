#pragma once

#include <cstddef>
#include <vector>

#include "wext/eval_result.hpp"
#include "wext/quadrature.hpp"

namespace wext {

enum class KernelKind { Classical, P, PQ, Bessel };

/// The damping factor that turns the classical beta integrand
/// t^{a-1} (1-t)^{b-1} into one of its extensions:
///
///   P       exp(-p / (t(1-t)))
///   PQ      exp(-p/t - q/(1-t))
///   Bessel  sqrt(2p/pi) (t(1-t))^{-1/2} K_{v+1/2}(p / (t(1-t)))
///
/// Classical has no damping. A P kernel with p = 0 (or PQ with p = q = 0)
/// is the classical beta.
struct BetaKernel {
  KernelKind kind = KernelKind::Classical;
  double p = 0.0;
  double q = 0.0;
  double v = 0.0;

  static BetaKernel classical() { return {}; }
  static BetaKernel p_only(double p) { return {KernelKind::P, p, 0.0, 0.0}; }
  static BetaKernel pq(double p, double q) { return {KernelKind::PQ, p, q, 0.0}; }
  static BetaKernel bessel(double p, double v) { return {KernelKind::Bessel, p, 0.0, v}; }

  // True when the extension collapses to the classical beta exactly.
  bool is_classical() const;
  // Throws Error(Domain) for parameters outside the kernel's domain, and for
  // (a, b) that make the integral diverge.
  void validate(double a, double b) const;
  // ln of the damping factor at (t, 1 - t); may be -inf.
  double log_weight(double t, double tc) const;
};

EvalResult beta_ext(double a, double b, const BetaKernel& kernel, const QuadratureSpec& spec = {});

/// B(a0 + n, b) for n = 0 .. count-1, integrated on shared nodes.
std::vector<EvalResult> beta_ext_block(double a0, std::size_t count, double b,
                                       const BetaKernel& kernel, const QuadratureSpec& spec = {});

EvalResult beta_p(double a, double b, double p, const QuadratureSpec& spec = {});
EvalResult beta_pq(double a, double b, double p, double q, const QuadratureSpec& spec = {});
// p must be > 0.
EvalResult beta_v(double a, double b, double p, double v, const QuadratureSpec& spec = {});

inline EvalResult from_quad(const QuadResult& q) {
  return {q.value, q.abs_error_estimate, q.converged, q.nodes_used, 0};
}

}  // namespace wext
