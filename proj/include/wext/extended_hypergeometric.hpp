#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "wext/eval_result.hpp"
#include "wext/extended_beta.hpp"
#include "wext/quadrature.hpp"

namespace wext {

/// Extended beta values B_ext(a0 + n, b) for one (a0, b, kernel, spec),
/// filled lazily in aligned blocks of kBlock so that every entry is
/// independent of the order in which entries were requested.
class CoefficientTable {
 public:
  static constexpr std::size_t kBlock = 16;

  CoefficientTable(double a0, double b, const BetaKernel& kernel, const QuadratureSpec& spec)
      : a0_(a0), b_(b), kernel_(kernel), spec_(spec) {}

  EvalResult at(std::size_t n);

 private:
  std::mutex mutex_;
  double a0_;
  double b_;
  BetaKernel kernel_;
  QuadratureSpec spec_;
  std::vector<EvalResult> values_;
};

/// Memo table of coefficient sequences shared across evaluations at fixed
/// parameters (e.g. one series at many z). Safe for concurrent use.
class CoefficientCache {
 public:
  explicit CoefficientCache(std::size_t max_tables = 512) : max_tables_(max_tables) {}

  std::shared_ptr<CoefficientTable> table(double a0, double b, const BetaKernel& kernel,
                                          const QuadratureSpec& spec);
  std::size_t size() const;
  void clear();

 private:
  using Key = std::tuple<int, double, double, double, double, double, double, double, int, long long>;
  mutable std::mutex mutex_;
  std::size_t max_tables_;
  std::map<Key, std::shared_ptr<CoefficientTable>> tables_;
};

/// Extended confluent series  sum_n B_ext(b+n, c-b) / B(b, c-b) z^n / n!.
/// Requires c > b > 0. Every extension has coefficients that do not grow
/// with n, which gives a rigorous geometric tail bound.
EvalResult phi_ext_series(double b, double c, const BetaKernel& kernel, double z,
                          const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);
/// Extended Gauss series  sum_n (a)_n B_ext(b+n, c-b) / B(b, c-b) z^n / n!,
/// |z| < 1.
EvalResult f_ext_series(double a, double b, double c, const BetaKernel& kernel, double z,
                        const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);

// Euler-type integral representations of the same functions.
EvalResult phi_ext_integral(double b, double c, const BetaKernel& kernel, double z,
                            const QuadratureSpec& spec = {});
// Valid for z < 1.
EvalResult f_ext_integral(double a, double b, double c, const BetaKernel& kernel, double z,
                          const QuadratureSpec& spec = {});

// Named members of the family. phi_pv/f_pv accept p = 0 only with v = 0.
EvalResult phi_p(double b, double c, double p, double z, const QuadratureSpec& spec = {},
                 CoefficientCache* cache = nullptr);
EvalResult f_p(double a, double b, double c, double p, double z, const QuadratureSpec& spec = {},
               CoefficientCache* cache = nullptr);
EvalResult phi_pq(double b, double c, double p, double q, double z,
                  const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);
EvalResult f_pq(double a, double b, double c, double p, double q, double z,
                const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);
EvalResult phi_pv_series(double b, double c, double p, double v, double z,
                         const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);
EvalResult phi_pv_integral(double b, double c, double p, double v, double z,
                           const QuadratureSpec& spec = {});
EvalResult f_pv_series(double a, double b, double c, double p, double v, double z,
                       const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);
EvalResult f_pv_integral(double a, double b, double c, double p, double v, double z,
                         const QuadratureSpec& spec = {});

/// |Phi_{p,v}(b;c;z) - e^z Phi_{p,v}(c-b;c;-z)| / |Phi_{p,v}(b;c;z)|.
double phi_pv_transform_check(double b, double c, double p, double v, double z,
                              const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);

/// n-th z-derivative of Phi_{p,v}(b;c;z) by the shift formula
/// (b)_n / (c)_n Phi_{p,v}(b+n; c+n; z).
EvalResult phi_pv_derivative(double b, double c, double p, double v, double z, int n,
                             const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);

}  // namespace wext
