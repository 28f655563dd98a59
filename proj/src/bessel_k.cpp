#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "wext/errors.hpp"
#include "wext/special_kernels.hpp"

namespace wext {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
constexpr int kMaxIterations = 100000;

// zeta(k) for odd k >= 3, enough terms for 1 ulp at k >= 9.
const std::array<double, 32>& odd_zeta() {
  static const std::array<double, 32> table = [] {
    std::array<double, 32> z{};
    z[0] = 1.2020569031595942854;  // zeta(3)
    z[1] = 1.0369277551433699263;  // zeta(5)
    z[2] = 1.0083492773819228268;  // zeta(7)
    for (std::size_t i = 3; i < z.size(); ++i) {
      const double k = 2.0 * static_cast<double>(i) + 3.0;
      double s = 0.0;
      for (int m = 60; m >= 2; --m) s += std::pow(static_cast<double>(m), -k);
      z[i] = 1.0 + s;
    }
    return z;
  }();
  return table;
}

// Temme's auxiliary coefficients for |mu| <= 1/2:
//   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// gam1 is formed from the odd part of ln Gamma(1+x) to avoid cancellation.
struct TemmeGammas {
  double gam1, gam2, gampl, gammi;
};

TemmeGammas temme_gammas(double mu) {
  TemmeGammas g{};
  g.gampl = 1.0 / std::tgamma(1.0 + mu);
  g.gammi = 1.0 / std::tgamma(1.0 - mu);
  g.gam2 = 0.5 * (g.gammi + g.gampl);
  if (mu == 0.0) {
    g.gam1 = -kEulerGamma;
    return g;
  }
  // D = lnGamma(1-mu) - lnGamma(1+mu) = 2 gamma mu + 2 sum_{k odd >= 3} zeta(k) mu^k / k
  const auto& zeta = odd_zeta();
  const double mu2 = mu * mu;
  double pw = mu * mu2;
  double odd = 0.0;
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    const double k = 2.0 * static_cast<double>(i) + 3.0;
    const double term = zeta[i] * pw / k;
    odd += term;
    if (std::fabs(term) < 1e-18 * std::fabs(kEulerGamma * mu)) break;
    pw *= mu2;
  }
  const double d = 2.0 * (kEulerGamma * mu + odd);
  g.gam1 = g.gampl * std::expm1(-d) / (2.0 * mu);
  return g;
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2 and 0 < x < 2 (Temme's series).
void temme_series(double mu, double x, double& k_mu, double& k_mu1) {
  const double x2 = 0.5 * x;
  const double pimu = kPi * mu;
  const double fact = std::fabs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = std::fabs(e) < kEps ? 1.0 : std::sinh(e) / e;
  const TemmeGammas g = temme_gammas(mu);
  double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
  double sum = ff;
  e = std::exp(e);
  double p = 0.5 * e / g.gampl;
  double q = 0.5 / (e * g.gammi);
  double c = 1.0;
  d = x2 * x2;
  double sum1 = p;
  const double mu2 = mu * mu;
  for (int i = 1; i < kMaxIterations; ++i) {
    ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
    c *= d / i;
    p /= i - mu;
    q /= i + mu;
    const double del = c * ff;
    sum += del;
    sum1 += c * (p - i * ff);
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  k_mu = sum;
  k_mu1 = sum1 * 2.0 / x;
}

// e^x K_mu(x) and e^x K_{mu+1}(x) for |mu| <= 1/2 and x >= 2 (Steed's CF2).
void steed_cf2_scaled(double mu, double x, double& k_mu, double& k_mu1) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < kMaxIterations; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::fabs(dels / s) < kEps) break;
  }
  h *= a1;
  k_mu = std::sqrt(kPi / (2.0 * x)) / s;
  k_mu1 = k_mu * (mu + x + 0.5 - h) / x;
}

bool is_half_integer(double order) { return std::fmod(order, 1.0) == 0.5; }

void check_args(double order, double x) {
  if (!(order >= 0.0) || !std::isfinite(order)) throw_domain("bessel_k: order must be >= 0");
  if (!(x > 0.0)) throw_domain("bessel_k: x must be > 0");
}

// e^x K_order(x) for finite x > 0.
double scaled_value(double order, double x) {
  if (x > 1e200) {
    // Two-term Hankel expansion; the remainder is below 1e-300 relative.
    const double m = 4.0 * order * order;
    return std::sqrt(kPi / (2.0 * x)) * (1.0 + (m - 1.0) / (8.0 * x));
  }
  double k_lo = 0.0;
  double k_hi = 0.0;
  double mu = 0.0;
  int steps = 0;
  if (is_half_integer(order)) {
    // K_{1/2} = K_{-1/2} = sqrt(pi / (2x)) e^{-x}
    mu = -0.5;
    steps = static_cast<int>(order + 0.5);
    k_lo = std::sqrt(kPi / (2.0 * x));
    k_hi = k_lo;
  } else {
    steps = static_cast<int>(order + 0.5);
    mu = order - steps;
    if (x < 2.0) {
      temme_series(mu, x, k_lo, k_hi);
      const double ex = std::exp(x);
      k_lo *= ex;
      k_hi *= ex;
    } else {
      steed_cf2_scaled(mu, x, k_lo, k_hi);
    }
  }
  // Upward recurrence K_{nu+1} = K_{nu-1} + (2 nu / x) K_nu, starting from
  // (K_mu, K_{mu+1}).
  for (int i = 1; i <= steps; ++i) {
    const double next = (mu + i) * (2.0 / x) * k_hi + k_lo;
    k_lo = k_hi;
    k_hi = next;
  }
  return k_lo;
}

}  // namespace

double bessel_k_scaled(double order, double x) {
  check_args(order, x);
  if (std::isinf(x)) return 0.0;
  return scaled_value(order, x);
}

double log_bessel_k(double order, double x) {
  check_args(order, x);
  if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
  const double s = scaled_value(order, x);
  if (std::isfinite(s) && s > 0.0) return std::log(s) - x;
  // Overflow only happens for small x and order > 0, where the leading term
  // Gamma(order)/2 (2/x)^order is exact to working precision.
  return log_gamma(order) - std::numbers::ln2 + order * std::log(2.0 / x);
}

EvalResult bessel_k(double order, double x) {
  check_args(order, x);
  EvalResult out;
  out.converged = true;
  out.work = 1;
  if (x > 800.0) {
    out.value = 0.0;
    return out;
  }
  const double s = scaled_value(order, x);
  const double v = s * std::exp(-x);
  if (!std::isfinite(v))
    throw Error(ErrorCode::Overflow, "bessel_k: result overflows for order " +
                                         std::to_string(order) + " at x " + std::to_string(x));
  out.value = v;
  out.abs_error_estimate = 8.0 * kEps * (order + 1.0) * std::fabs(v);
  return out;
}

}  // namespace wext
