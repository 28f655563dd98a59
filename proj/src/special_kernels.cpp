#include "wext/special_kernels.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wext/errors.hpp"

namespace wext {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Shared driver for hypergeometric-type series whose consecutive term ratio
// is known in closed form. `ratio(n)` returns term_{n+1} / term_n.
template <class Ratio>
EvalResult sum_ratio_series(Ratio&& ratio) {
  CompensatedSum sum;
  double term = 1.0;
  int quiet = 0;
  long n = 0;
  EvalResult out;
  for (; n < kSeriesMaxTerms; ++n) {
    sum.add(term);
    if (term == 0.0) {
      out.converged = true;
      break;
    }
    const double r = ratio(n);
    const double next = term * r;
    const double ar = std::fabs(r);
    const double s = std::fabs(sum.value());
    if (ar < 1.0) {
      const double tail = std::fabs(next) / (1.0 - ar);
      if (tail <= kSeriesRelTol * s || tail == 0.0)
        ++quiet;
      else
        quiet = 0;
      if (quiet >= 5) {
        out.abs_error_estimate = tail;
        out.converged = true;
        ++n;
        break;
      }
    } else {
      quiet = 0;
    }
    term = next;
    if (!std::isfinite(term)) break;
  }
  out.value = sum.value();
  out.work = n;
  out.abs_error_estimate += 4.0 * kEps * sum.abs_sum();
  if (sum.abs_sum() > 1e6 * std::fabs(out.value)) out.flags |= kFlagCancellation;
  if (!std::isfinite(out.value)) out.converged = false;
  return out;
}

}  // namespace

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::nearbyint(x) == x; }

double gamma(double x) {
  if (std::isnan(x)) throw_domain("gamma: NaN argument");
  if (is_nonpositive_integer(x))
    throw Error(ErrorCode::Pole, "gamma: pole at non-positive integer " + std::to_string(x));
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw_domain("log_gamma: x must be > 0");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double pochhammer(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x + k;
  return r;
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw_domain("beta: a and b must be > 0");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw_domain("beta: a and b must be > 0");
  // Direct product while Gamma(a + b) is representable, log space beyond.
  if (a + b < 170.0) return std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
  return std::exp(log_beta(a, b));
}

EvalResult kummer_phi(double b, double c, double z) {
  if (is_nonpositive_integer(c))
    throw Error(ErrorCode::Parameter, "kummer_phi: c must not be a non-positive integer");
  if (!std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z))
    throw_domain("kummer_phi: non-finite argument");
  return sum_ratio_series([&](long n) { return (b + n) / (c + n) * z / (n + 1.0); });
}

EvalResult gauss_2f1(double a, double b, double c, double z) {
  if (!(std::fabs(z) < 1.0)) throw_domain("gauss_2f1: requires |z| < 1");
  if (is_nonpositive_integer(c))
    throw Error(ErrorCode::Parameter, "gauss_2f1: c must not be a non-positive integer");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw_domain("gauss_2f1: non-finite argument");
  return sum_ratio_series(
      [&](long n) { return (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z; });
}

}  // namespace wext
