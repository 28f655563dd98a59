#include "wext/extended_beta.hpp"

#include <cmath>
#include <numbers>

#include "wext/errors.hpp"
#include "wext/special_kernels.hpp"

namespace wext {

namespace {

void check_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw_domain(std::string("extended beta: ") + name + " must be finite");
}

}  // namespace

bool BetaKernel::is_classical() const {
  switch (kind) {
    case KernelKind::Classical:
      return true;
    case KernelKind::P:
      return p == 0.0;
    case KernelKind::PQ:
      return p == 0.0 && q == 0.0;
    case KernelKind::Bessel:
      return p == 0.0 && v == 0.0;
  }
  return false;
}

void BetaKernel::validate(double a, double b) const {
  check_finite(a, "a");
  check_finite(b, "b");
  check_finite(p, "p");
  check_finite(q, "q");
  check_finite(v, "v");
  switch (kind) {
    case KernelKind::Classical:
      break;
    case KernelKind::P:
      if (p < 0.0) throw_domain("p must be >= 0");
      break;
    case KernelKind::PQ:
      if (p < 0.0) throw_domain("p must be >= 0");
      if (q < 0.0) throw_domain("q must be >= 0");
      break;
    case KernelKind::Bessel:
      if (v < 0.0) throw_domain("v must be >= 0");
      if (p < 0.0 || (p == 0.0 && v != 0.0)) throw_domain("p must be > 0");
      break;
  }
  // Without damping at an endpoint the power there must be integrable.
  const bool damp_left = kind == KernelKind::PQ ? p > 0.0 : !is_classical();
  const bool damp_right = kind == KernelKind::PQ ? q > 0.0 : !is_classical();
  if (!damp_left && !(a > 0.0)) throw_domain("a must be > 0 when p = 0");
  if (!damp_right && !(b > 0.0)) throw_domain(kind == KernelKind::PQ ? "b must be > 0 when q = 0"
                                                                     : "b must be > 0 when p = 0");
}

double BetaKernel::log_weight(double t, double tc) const {
  switch (kind) {
    case KernelKind::Classical:
      return 0.0;
    case KernelKind::P:
      return -p / (t * tc);
    case KernelKind::PQ:
      return -p / t - q / tc;
    case KernelKind::Bessel: {
      if (p == 0.0) return 0.0;
      const double s = t * tc;
      return 0.5 * std::log(2.0 * p / std::numbers::pi) - 0.5 * std::log(s) +
             log_bessel_k(v + 0.5, p / s);
    }
  }
  return 0.0;
}

std::vector<EvalResult> beta_ext_block(double a0, std::size_t count, double b,
                                       const BetaKernel& kernel, const QuadratureSpec& spec) {
  kernel.validate(a0, b);
  std::vector<EvalResult> out(count);
  if (count == 0) return out;
  if (kernel.is_classical()) {
    for (std::size_t n = 0; n < count; ++n) {
      out[n].value = beta(a0 + static_cast<double>(n), b);
      out[n].abs_error_estimate = 1e-14 * out[n].value;
      out[n].converged = true;
      out[n].work = 1;
    }
    return out;
  }
  const auto q = integrate_01_batch(
      [&](double t, double tc, std::span<double> f) {
        const double lt = std::log(t);
        const double base = (a0 - 1.0) * lt + (b - 1.0) * std::log(tc) + kernel.log_weight(t, tc);
        for (std::size_t n = 0; n < f.size(); ++n) f[n] = std::exp(base + static_cast<double>(n) * lt);
      },
      count, spec);
  for (std::size_t n = 0; n < count; ++n) out[n] = from_quad(q[n]);
  return out;
}

EvalResult beta_ext(double a, double b, const BetaKernel& kernel, const QuadratureSpec& spec) {
  return beta_ext_block(a, 1, b, kernel, spec)[0];
}

EvalResult beta_p(double a, double b, double p, const QuadratureSpec& spec) {
  return beta_ext(a, b, BetaKernel::p_only(p), spec);
}

EvalResult beta_pq(double a, double b, double p, double q, const QuadratureSpec& spec) {
  return beta_ext(a, b, BetaKernel::pq(p, q), spec);
}

EvalResult beta_v(double a, double b, double p, double v, const QuadratureSpec& spec) {
  if (!(p > 0.0)) throw_domain("p must be > 0");
  return beta_ext(a, b, BetaKernel::bessel(p, v), spec);
}

}  // namespace wext
