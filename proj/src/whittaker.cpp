#include "wext/whittaker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wext/errors.hpp"
#include "wext/special_kernels.hpp"

namespace wext {

namespace {

constexpr double kLnPi = 1.1447298858494002;  // ln(pi)

void check_z(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw_domain("z must be > 0");
}

// ln of z^{rho+1/2} e^{sign z/2}
double log_prefactor(double rho, double z, double sign) {
  return (rho + 0.5) * std::log(z) + sign * 0.5 * z;
}

EvalResult scaled(EvalResult r, double log_factor) {
  const double f = std::exp(log_factor);
  r.value *= f;
  r.abs_error_estimate *= f;
  return r;
}

// Common constant sqrt(2p/pi) / B(rho-lambda+1/2, rho+lambda+1/2) in log form.
double log_rep_constant(const WhittakerParams& w) {
  return 0.5 * std::log(2.0 * w.p / std::numbers::pi) - log_beta(w.b(), w.c() - w.b());
}

}  // namespace

void WhittakerParams::validate() const {
  if (!std::isfinite(p) || !std::isfinite(v) || !std::isfinite(lambda) || !std::isfinite(rho))
    throw_domain("Whittaker parameters must be finite");
  if (!(p >= 0.0)) throw_domain("p must be >= 0");
  if (!(v >= 0.0)) throw_domain("v must be >= 0");
  if (p == 0.0 && v != 0.0) throw_domain("p must be > 0 when v > 0");
  if (!(rho > -0.5)) throw_domain("rho must be > -1/2");
  if (!(rho + lambda > -0.5)) throw_domain("rho + lambda must be > -1/2");
  if (!(rho - lambda > -0.5)) throw_domain("rho - lambda must be > -1/2");
}

double relative_deviation(double lhs, double rhs) {
  if (lhs == rhs) return 0.0;
  return std::fabs(lhs - rhs) / std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
}

EvalResult m_classical(double lambda, double rho, double z) {
  WhittakerParams{0.0, 0.0, lambda, rho}.validate();
  check_z(z);
  return scaled(kummer_phi(rho - lambda + 0.5, 2.0 * rho + 1.0, z), log_prefactor(rho, z, -1.0));
}

EvalResult m_p(double p, double lambda, double rho, double z, const QuadratureSpec& spec,
               CoefficientCache* cache) {
  WhittakerParams{p, 0.0, lambda, rho}.validate();
  check_z(z);
  return scaled(phi_p(rho - lambda + 0.5, 2.0 * rho + 1.0, p, z, spec, cache),
                log_prefactor(rho, z, -1.0));
}

EvalResult m_pq(double p, double q, double lambda, double rho, double z,
                const QuadratureSpec& spec, CoefficientCache* cache) {
  WhittakerParams{p, 0.0, lambda, rho}.validate();
  if (!(q >= 0.0)) throw_domain("q must be >= 0");
  check_z(z);
  return scaled(phi_pq(rho - lambda + 0.5, 2.0 * rho + 1.0, p, q, z, spec, cache),
                log_prefactor(rho, z, -1.0));
}

EvalResult m_pv(const WhittakerParams& w, double z, const QuadratureSpec& spec,
                CoefficientCache* cache) {
  w.validate();
  check_z(z);
  return scaled(phi_pv_series(w.b(), w.c(), w.p, w.v, z, spec, cache),
                log_prefactor(w.rho, z, -1.0));
}

EvalResult m_pv_alt(const WhittakerParams& w, double z, const QuadratureSpec& spec,
                    CoefficientCache* cache) {
  w.validate();
  check_z(z);
  return scaled(phi_pv_series(w.rho + w.lambda + 0.5, w.c(), w.p, w.v, -z, spec, cache),
                log_prefactor(w.rho, z, +1.0));
}

EvalResult m_pv_integral(const WhittakerParams& w, double z, Representation rep, double a,
                         double b, const QuadratureSpec& spec) {
  w.validate();
  check_z(z);
  if (!(w.p > 0.0)) throw_domain("integral representations require p > 0");
  const double order = w.v + 0.5;
  const double e_left = w.rho - w.lambda - 1.0;
  const double e_right = w.rho + w.lambda - 1.0;
  const double log_const = log_rep_constant(w);
  QuadResult q;
  double log_pre = 0.0;
  switch (rep) {
    case Representation::Unit:
      log_pre = log_prefactor(w.rho, z, -1.0) + log_const;
      q = integrate_01(
          [&](double t, double tc) {
            return std::exp(e_left * std::log(t) + e_right * std::log(tc) + z * t +
                            log_bessel_k(order, w.p / (t * tc)));
          },
          spec);
      break;
    case Representation::Mirror:
      log_pre = log_prefactor(w.rho, z, +1.0) + log_const;
      q = integrate_01(
          [&](double u, double uc) {
            return std::exp(e_right * std::log(u) + e_left * std::log(uc) - z * u +
                            log_bessel_k(order, w.p / (u * uc)));
          },
          spec);
      break;
    case Representation::Interval: {
      if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
        throw_domain("representation 3 requires finite b > a");
      const double len = b - a;
      log_pre = (1.0 - 2.0 * w.rho) * std::log(len) + log_prefactor(w.rho, z, -1.0) + log_const;
      q = integrate_finite(
          [&](double, double da, double db) {
            return std::exp(e_left * std::log(da) + e_right * std::log(db) + z * (da / len) +
                            log_bessel_k(order, w.p * (len / da) * (len / db)));
          },
          a, b, spec);
      break;
    }
    case Representation::HalfLine:
      log_pre = log_prefactor(w.rho, z, -1.0) + log_const;
      q = integrate_semi_inf_split(
          [&](double u) {
            const double up1 = 1.0 + u;
            return std::exp(e_left * std::log(u) - 2.0 * w.rho * std::log1p(u) + z * (u / up1) +
                            log_bessel_k(order, w.p * up1 * (up1 / u)));
          },
          1.0, spec);
      break;
    case Representation::Symmetric:
      return m_pv_integral(w, z, Representation::Interval, -1.0, 1.0, spec);
    default:
      throw_domain("representation must be 1..5");
  }
  return scaled(from_quad(q), log_pre);
}

double bessel_moment(double r, double v) {
  if (!std::isfinite(r) || !std::isfinite(v)) throw_domain("r and v must be finite");
  if (!(v >= 0.0)) throw_domain("v must be >= 0");
  if (!(r - v > 0.0)) throw_domain("requires r - v > 0");
  if (!(r + v > -1.0)) throw_domain("requires r + v > -1");
  return std::exp2(r - 1.5) * gamma(0.5 * (r - v)) * gamma(0.5 * (r + v + 1.0));
}

EvalResult bessel_moment_numeric(double r, double v, const QuadratureSpec& spec) {
  bessel_moment(r, v);  // domain checks
  return from_quad(integrate_semi_inf(
      [&](double u) { return std::exp((r - 0.5) * std::log(u) + log_bessel_k(v + 0.5, u)); },
      spec));
}

void MellinQuery::validate() const {
  WhittakerParams w = params;
  w.p = 1.0;  // p is the transform variable
  w.validate();
  if (!std::isfinite(r)) throw_domain("r must be finite");
  if (!(r - params.v > 0.0)) throw_domain("Mellin transform requires r - v > 0");
  if (!(r + params.v > -1.0)) throw_domain("Mellin transform requires r + v > -1");
  if (!(params.rho + r - params.lambda > 0.5) || !(params.rho + r + params.lambda > 0.5))
    throw_domain("Mellin transform requires rho + r +- lambda > 1/2");
  check_z(z);
}

EvalResult mellin_numeric(const MellinQuery& query, const QuadratureSpec& spec) {
  query.validate();
  const double z = query.z;
  double worst_inner_rel = 0.0;
  bool inner_ok = true;
  std::int64_t inner_work = 0;
  const QuadResult q = integrate_semi_inf_split(
      [&](double p) {
        WhittakerParams w = query.params;
        w.p = p;
        const EvalResult m = m_pv(w, z, spec);
        inner_ok = inner_ok && m.converged;
        inner_work += m.work;
        if (m.value != 0.0)
          worst_inner_rel = std::max(worst_inner_rel, m.abs_error_estimate / std::fabs(m.value));
        if (m.value == 0.0) return 0.0;
        return std::exp((query.r - 1.0) * std::log(p)) * m.value;
      },
      1.0, spec);
  EvalResult out = from_quad(q);
  out.abs_error_estimate += worst_inner_rel * std::fabs(out.value);
  out.converged = out.converged && inner_ok;
  out.work += inner_work;
  return out;
}

EvalResult mellin_closed_form(const MellinQuery& query, MellinForm form) {
  query.validate();
  const auto& w = query.params;
  const double r = query.r;
  const double v = w.v;
  const double z = query.z;
  const double common = (r - 1.0) * std::numbers::ln2 + log_gamma(0.5 * (r - v)) +
                        log_gamma(0.5 * (r + v + 1.0)) - 0.5 * kLnPi -
                        log_beta(w.b(), w.c() - w.b()) - 0.5 * z;
  if (form == MellinForm::Corrected) {
    const double lb = log_beta(w.rho + r - w.lambda + 0.5, w.rho + r + w.lambda + 0.5);
    const EvalResult phi = kummer_phi(w.rho + r - w.lambda + 0.5, 2.0 * w.rho + 2.0 * r + 1.0, z);
    return scaled(phi, (w.rho + 0.5) * std::log(z) + common + lb);
  }
  const double lb = log_beta(w.rho + r - w.lambda - 0.5, w.rho + r + w.lambda - 0.5);
  const EvalResult phi = kummer_phi(w.rho + r - w.lambda - 0.5, 2.0 * w.rho + 2.0 * r, z);
  return scaled(phi, (w.rho + 0.5 - r) * std::log(z) + common + lb);
}

EvalResult mellin_closed_form_v0(const MellinQuery& query) {
  query.validate();
  if (query.params.v != 0.0) throw_domain("the v = 0 closed form requires v = 0");
  const auto& w = query.params;
  const double r = query.r;
  const double log_c = -r * std::log(query.z) + log_gamma(r) +
                       log_beta(w.rho + r - w.lambda + 0.5, w.rho + r + w.lambda + 0.5) -
                       log_beta(w.b(), w.c() - w.b());
  return scaled(m_classical(w.lambda, w.rho + r, query.z), log_c);
}

void LaplaceQuery::validate() const {
  params.validate();
  if (!std::isfinite(delta) || !std::isfinite(alpha) || !std::isfinite(mu))
    throw_domain("delta, alpha, mu must be finite");
  if (!(mu > 0.0)) throw_domain("requires mu > 0");
  if (!(2.0 * alpha > mu)) throw_domain("requires 2 alpha > mu");
  if (!(delta + params.rho > -0.5)) throw_domain("requires delta + rho > -1/2");
}

namespace {

// ln of Gamma(delta+rho+1/2) mu^{rho+1/2} (alpha+mu/2)^{-delta-rho-1/2}
double laplace_log_prefactor(const LaplaceQuery& q) {
  const double s = q.delta + q.params.rho + 0.5;
  return log_gamma(s) + (q.params.rho + 0.5) * std::log(q.mu) - s * std::log(q.alpha + 0.5 * q.mu);
}

}  // namespace

EvalResult laplace_closed_form(const LaplaceQuery& query, const QuadratureSpec& spec,
                               CoefficientCache* cache) {
  query.validate();
  const auto& w = query.params;
  const double s = query.delta + w.rho + 0.5;
  return scaled(f_pv_series(s, w.b(), w.c(), w.p, w.v, query.argument(), spec, cache),
                laplace_log_prefactor(query));
}

EvalResult laplace_closed_form_2f1(const LaplaceQuery& query) {
  query.validate();
  const auto& w = query.params;
  if (w.p != 0.0 || w.v != 0.0) throw_domain("the 2F1 closed form requires p = v = 0");
  const double s = query.delta + w.rho + 0.5;
  return scaled(gauss_2f1(s, w.b(), w.c(), query.argument()), laplace_log_prefactor(query));
}

EvalResult laplace_numeric(const LaplaceQuery& query, const QuadratureSpec& spec,
                           CoefficientCache* cache) {
  query.validate();
  CoefficientCache local;
  CoefficientCache* coefs = cache ? cache : &local;
  const auto& w = query.params;
  const double b = w.b();
  const double cb = w.c() - b;
  const BetaKernel kernel = BetaKernel::bessel(w.p, w.v);

  // Phi_{p,v}(b;c;z) <= c0 e^z for z > 0 since the coefficients do not grow,
  // so the integrand is bounded by c0 x^{delta-1} (mu x)^{rho+1/2}
  // e^{-(alpha - mu/2) x}; the leading series term bounds the integral from
  // below. Nodes whose bound is negligible against it are skipped.
  const double c0 = kernel.is_classical()
                        ? 1.0
                        : coefs->table(b, cb, kernel, spec)->at(0).value / beta(b, cb);
  const double log_c0 = std::log(c0);
  const double log_lower = log_c0 + laplace_log_prefactor(query);
  const double decay = query.alpha - 0.5 * query.mu;
  constexpr double kLogNegligible = -57.5;  // ln(1e-25)

  bool inner_ok = true;
  double worst_inner_rel = 0.0;
  std::int64_t inner_work = 0;
  const QuadResult q = integrate_semi_inf(
      [&](double x) {
        const double lx = std::log(x);
        const double log_bound = log_c0 + (query.delta - 1.0) * lx +
                                 (w.rho + 0.5) * (std::log(query.mu) + lx) - decay * x;
        if (log_bound < log_lower + kLogNegligible) return 0.0;
        const EvalResult m = m_pv(w, query.mu * x, spec, coefs);
        inner_ok = inner_ok && m.converged;
        inner_work += m.work;
        if (m.value == 0.0) return 0.0;
        worst_inner_rel = std::max(worst_inner_rel, m.abs_error_estimate / std::fabs(m.value));
        return std::exp((query.delta - 1.0) * lx - query.alpha * x) * m.value;
      },
      spec);
  EvalResult out = from_quad(q);
  out.abs_error_estimate += worst_inner_rel * std::fabs(out.value);
  out.converged = out.converged && inner_ok;
  out.work += inner_work;
  return out;
}

EvalResult m_pv_normalized(const WhittakerParams& w, double z, const QuadratureSpec& spec,
                           CoefficientCache* cache) {
  return scaled(m_pv(w, z, spec, cache), -log_prefactor(w.rho, z, -1.0));
}

EvalResult m_pv_derivative_formula(const WhittakerParams& w, double z, int n,
                                   const QuadratureSpec& spec, CoefficientCache* cache) {
  w.validate();
  check_z(z);
  if (n < 0) throw_domain("derivative order n must be >= 0");
  WhittakerParams shifted = w;
  shifted.lambda = w.lambda - 0.5 * n;
  shifted.rho = w.rho + 0.5 * n;
  const double ratio = pochhammer(w.b(), n) / pochhammer(w.c(), n);
  EvalResult r = scaled(m_pv(shifted, z, spec, cache), 0.5 * z - (shifted.rho + 0.5) * std::log(z));
  r.value *= ratio;
  r.abs_error_estimate *= std::fabs(ratio);
  return r;
}

double transform_check(const WhittakerParams& w, double z, const QuadratureSpec& spec,
                       CoefficientCache* cache) {
  w.validate();
  check_z(z);
  const double lhs = std::exp(-0.5 * z) * phi_pv_series(w.b(), w.c(), w.p, w.v, z, spec, cache).value;
  const double rhs = std::exp(0.5 * z) *
                     phi_pv_series(w.rho + w.lambda + 0.5, w.c(), w.p, w.v, -z, spec, cache).value;
  return relative_deviation(lhs, rhs);
}

}  // namespace wext
