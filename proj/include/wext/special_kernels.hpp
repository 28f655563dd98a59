#pragma once

#include <cmath>

#include "wext/eval_result.hpp"

namespace wext {

// Relative truncation target shared by every power series in the library.
inline constexpr double kSeriesRelTol = 1e-16;
inline constexpr long kSeriesMaxTerms = 100000;

/// Neumaier's variant of Kahan summation. Also tracks the sum of magnitudes
/// so callers can estimate cancellation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    abs_sum_ += std::fabs(x);
  }
  double value() const { return sum_ + comp_; }
  double abs_sum() const { return abs_sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_sum_ = 0.0;
};

// Throws Error(Pole) at non-positive integers.
double gamma(double x);
// Throws Error(Domain) for x <= 0.
double log_gamma(double x);
double pochhammer(double x, int n);
// Throws Error(Domain) unless a, b > 0.
double beta(double a, double b);
double log_beta(double a, double b);

/// K_order(x) for order >= 0 and x > 0.
///
/// Half-integer orders use the closed form for K_{1/2} and upward recurrence.
/// Other orders use Temme's series (x < 2) or Steed's continued fraction
/// (x >= 2) at the reduced order |mu| <= 1/2, followed by the same upward
/// recurrence. Throws Error(Overflow) if the value is not representable;
/// underflows to 0 with converged=true for large x.
EvalResult bessel_k(double order, double x);

// e^x K_order(x). Infinite when K_order(x) overflows.
double bessel_k_scaled(double order, double x);

// ln K_order(x), finite wherever the value itself would over- or underflow.
// Returns -inf for x = +inf.
double log_bessel_k(double order, double x);

/// Kummer's confluent hypergeometric series Phi(b; c; z) = 1F1(b; c; z).
///
/// Summed directly for either sign of z (no Kummer transformation) with
/// compensated accumulation. converged=false if the term budget runs out.
EvalResult kummer_phi(double b, double c, double z);

/// Gauss series 2F1(a, b; c; z) for |z| < 1.
EvalResult gauss_2f1(double a, double b, double c, double z);

bool is_nonpositive_integer(double x);

}  // namespace wext
