#include "wext/extended_hypergeometric.hpp"

#include <cmath>
#include <limits>

#include "wext/errors.hpp"
#include "wext/special_kernels.hpp"

namespace wext {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_bc(double b, double c) {
  if (!std::isfinite(b) || !std::isfinite(c)) throw_domain("b and c must be finite");
  if (!(b > 0.0)) throw_domain("b must be > 0");
  if (!(c > b)) throw_domain("c must be > b");
}

BetaKernel bessel_kernel(double p, double v) {
  if (!(v >= 0.0)) throw_domain("v must be >= 0");
  if (!(p >= 0.0)) throw_domain("p must be >= 0");
  if (p == 0.0 && v != 0.0) throw_domain("p must be > 0 when v > 0");
  return BetaKernel::bessel(p, v);
}

// Shared series driver. `confluent` selects Phi (no (a)_n factor).
EvalResult ext_series(bool confluent, double a, double b, double c, const BetaKernel& kernel,
                      double z, const QuadratureSpec& spec, CoefficientCache* cache) {
  check_bc(b, c);
  if (!std::isfinite(z)) throw_domain("z must be finite");
  if (!confluent) {
    if (!std::isfinite(a)) throw_domain("a must be finite");
    if (!(std::fabs(z) < 1.0)) throw_domain("series requires |z| < 1");
  }
  const double cb = c - b;
  kernel.validate(b, cb);
  const bool classical = kernel.is_classical();

  std::shared_ptr<CoefficientTable> table;
  double norm = 1.0;
  if (!classical) {
    table = cache ? cache->table(b, cb, kernel, spec)
                  : std::make_shared<CoefficientTable>(b, cb, kernel, spec);
    norm = beta(b, cb);
  }

  CompensatedSum sum;
  double weight = 1.0;      // z^n / n!  or  (a)_n z^n / n!
  double classical_coef = 1.0;  // (b)_n / (c)_n
  double err = 0.0;
  bool coefs_ok = true;
  int quiet = 0;
  bool certified = false;
  long n = 0;
  std::int64_t work = 0;
  const double az = std::fabs(z);
  for (; n < kSeriesMaxTerms; ++n) {
    double coef = classical_coef;
    double coef_rel_err = 0.0;
    if (!classical) {
      const EvalResult r = table->at(static_cast<std::size_t>(n));
      coef = r.value / norm;
      coefs_ok = coefs_ok && r.converged;
      work += r.work;
      coef_rel_err = r.value != 0.0 ? r.abs_error_estimate / std::fabs(r.value) : 0.0;
    }
    const double term = coef * weight;
    sum.add(term);
    err += std::fabs(term) * (coef_rel_err + 2.0 * kEps);

    // Geometric tail bound; coefficients are non-increasing in n.
    const double np1 = static_cast<double>(n) + 1.0;
    const double growth = confluent ? 1.0 : std::max(1.0, std::fabs(a + n) / np1);
    const double ratio = az * growth / np1;
    const double next_weight = weight * z / np1 * (confluent ? 1.0 : (a + n));
    if (next_weight == 0.0) {
      certified = true;
      ++n;
      break;
    }
    if (ratio < 1.0) {
      const double tail = std::fabs(term) * ratio / (1.0 - ratio);
      if (tail <= kSeriesRelTol * std::fabs(sum.value())) {
        if (++quiet >= 5) {
          err += tail;
          certified = true;
          ++n;
          break;
        }
      } else {
        quiet = 0;
      }
    }
    weight = next_weight;
    if (classical) classical_coef *= (b + n) / (c + n);
    if (!std::isfinite(weight)) break;
  }
  EvalResult out;
  out.value = sum.value();
  out.abs_error_estimate = err + 2.0 * kEps * sum.abs_sum();
  out.converged = certified && coefs_ok && std::isfinite(out.value);
  out.work = classical ? n : work;
  if (sum.abs_sum() > 1e6 * std::fabs(out.value)) out.flags |= kFlagCancellation;
  return out;
}

EvalResult ext_integral(bool confluent, double a, double b, double c, const BetaKernel& kernel,
                        double z, const QuadratureSpec& spec) {
  check_bc(b, c);
  if (!std::isfinite(z)) throw_domain("z must be finite");
  if (!confluent) {
    if (!std::isfinite(a)) throw_domain("a must be finite");
    if (!(z < 1.0)) throw_domain("integral representation requires z < 1");
  }
  const double cb = c - b;
  kernel.validate(b, cb);
  const double norm = beta(b, cb);
  const QuadResult q = integrate_01(
      [&](double t, double tc) {
        double e = (b - 1.0) * std::log(t) + (cb - 1.0) * std::log(tc) + kernel.log_weight(t, tc);
        e += confluent ? z * t : -a * std::log1p(-z * t);
        return std::exp(e);
      },
      spec);
  EvalResult out = from_quad(q);
  out.value /= norm;
  out.abs_error_estimate /= norm;
  return out;
}

}  // namespace

EvalResult CoefficientTable::at(std::size_t n) {
  std::lock_guard<std::mutex> lock(mutex_);
  while (values_.size() <= n) {
    const double start = a0_ + static_cast<double>(values_.size());
    const auto block = beta_ext_block(start, kBlock, b_, kernel_, spec_);
    values_.insert(values_.end(), block.begin(), block.end());
  }
  return values_[n];
}

std::shared_ptr<CoefficientTable> CoefficientCache::table(double a0, double b,
                                                          const BetaKernel& kernel,
                                                          const QuadratureSpec& spec) {
  const Key key{static_cast<int>(kernel.kind), a0, b, kernel.p, kernel.q, kernel.v,
                spec.rel_tol, spec.abs_tol, spec.max_level,
                static_cast<long long>(spec.max_nodes)};
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;
  if (tables_.size() >= max_tables_) tables_.clear();
  auto t = std::make_shared<CoefficientTable>(a0, b, kernel, spec);
  tables_.emplace(key, t);
  return t;
}

std::size_t CoefficientCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return tables_.size();
}

void CoefficientCache::clear() {
  std::lock_guard<std::mutex> lock(mutex_);
  tables_.clear();
}

EvalResult phi_ext_series(double b, double c, const BetaKernel& kernel, double z,
                          const QuadratureSpec& spec, CoefficientCache* cache) {
  return ext_series(true, 0.0, b, c, kernel, z, spec, cache);
}

EvalResult f_ext_series(double a, double b, double c, const BetaKernel& kernel, double z,
                        const QuadratureSpec& spec, CoefficientCache* cache) {
  return ext_series(false, a, b, c, kernel, z, spec, cache);
}

EvalResult phi_ext_integral(double b, double c, const BetaKernel& kernel, double z,
                            const QuadratureSpec& spec) {
  return ext_integral(true, 0.0, b, c, kernel, z, spec);
}

EvalResult f_ext_integral(double a, double b, double c, const BetaKernel& kernel, double z,
                          const QuadratureSpec& spec) {
  return ext_integral(false, a, b, c, kernel, z, spec);
}

EvalResult phi_p(double b, double c, double p, double z, const QuadratureSpec& spec,
                 CoefficientCache* cache) {
  return phi_ext_series(b, c, BetaKernel::p_only(p), z, spec, cache);
}

EvalResult f_p(double a, double b, double c, double p, double z, const QuadratureSpec& spec,
               CoefficientCache* cache) {
  return f_ext_series(a, b, c, BetaKernel::p_only(p), z, spec, cache);
}

EvalResult phi_pq(double b, double c, double p, double q, double z, const QuadratureSpec& spec,
                  CoefficientCache* cache) {
  return phi_ext_series(b, c, BetaKernel::pq(p, q), z, spec, cache);
}

EvalResult f_pq(double a, double b, double c, double p, double q, double z,
                const QuadratureSpec& spec, CoefficientCache* cache) {
  return f_ext_series(a, b, c, BetaKernel::pq(p, q), z, spec, cache);
}

EvalResult phi_pv_series(double b, double c, double p, double v, double z,
                         const QuadratureSpec& spec, CoefficientCache* cache) {
  return phi_ext_series(b, c, bessel_kernel(p, v), z, spec, cache);
}

EvalResult phi_pv_integral(double b, double c, double p, double v, double z,
                           const QuadratureSpec& spec) {
  if (!(p > 0.0)) throw_domain("p must be > 0");
  return phi_ext_integral(b, c, bessel_kernel(p, v), z, spec);
}

EvalResult f_pv_series(double a, double b, double c, double p, double v, double z,
                       const QuadratureSpec& spec, CoefficientCache* cache) {
  return f_ext_series(a, b, c, bessel_kernel(p, v), z, spec, cache);
}

EvalResult f_pv_integral(double a, double b, double c, double p, double v, double z,
                         const QuadratureSpec& spec) {
  if (!(p > 0.0)) throw_domain("p must be > 0");
  return f_ext_integral(a, b, c, bessel_kernel(p, v), z, spec);
}

double phi_pv_transform_check(double b, double c, double p, double v, double z,
                              const QuadratureSpec& spec, CoefficientCache* cache) {
  const double lhs = phi_pv_series(b, c, p, v, z, spec, cache).value;
  const double rhs = std::exp(z) * phi_pv_series(c - b, c, p, v, -z, spec, cache).value;
  if (lhs == rhs) return 0.0;
  return std::fabs(lhs - rhs) / std::fabs(lhs);
}

EvalResult phi_pv_derivative(double b, double c, double p, double v, double z, int n,
                             const QuadratureSpec& spec, CoefficientCache* cache) {
  if (n < 0) throw_domain("derivative order n must be >= 0");
  check_bc(b, c);
  EvalResult r = phi_pv_series(b + n, c + n, p, v, z, spec, cache);
  const double factor = pochhammer(b, n) / pochhammer(c, n);
  r.value *= factor;
  r.abs_error_estimate *= std::fabs(factor);
  return r;
}

}  // namespace wext
