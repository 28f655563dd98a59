#pragma once

#include "wext/eval_result.hpp"
#include "wext/extended_hypergeometric.hpp"
#include "wext/quadrature.hpp"

namespace wext {

/// Parameters (p, v, lambda, rho) of the extended Whittaker function
/// M_{p,v,lambda,rho}(z) = z^{rho+1/2} e^{-z/2} Phi_{p,v}(rho-lambda+1/2; 2rho+1; z).
struct WhittakerParams {
  double p = 0.0;
  double v = 0.0;
  double lambda = 0.0;
  double rho = 0.0;

  // rho > -1/2, rho +- lambda > -1/2, p >= 0, v >= 0, and p > 0 when v > 0.
  void validate() const;
  double b() const { return rho - lambda + 0.5; }
  double c() const { return 2.0 * rho + 1.0; }
};

/// Classical M_{lambda,rho}(z).
EvalResult m_classical(double lambda, double rho, double z);

/// Phi_p-based extension M_{p,lambda,rho}(z).
EvalResult m_p(double p, double lambda, double rho, double z, const QuadratureSpec& spec = {},
               CoefficientCache* cache = nullptr);
/// Phi_{p,q}-based extension M_{p,q,lambda,rho}(z).
EvalResult m_pq(double p, double q, double lambda, double rho, double z,
                const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);
/// M_{p,v,lambda,rho}(z) from the Phi_{p,v} series.
EvalResult m_pv(const WhittakerParams& params, double z, const QuadratureSpec& spec = {},
                CoefficientCache* cache = nullptr);
/// The mirrored form z^{rho+1/2} e^{z/2} Phi_{p,v}(rho+lambda+1/2; 2rho+1; -z).
EvalResult m_pv_alt(const WhittakerParams& params, double z, const QuadratureSpec& spec = {},
                    CoefficientCache* cache = nullptr);

/// The five single-integral representations of M_{p,v,lambda,rho}(z):
///   Unit      over t in (0,1), kernel e^{zt}
///   Mirror    u = 1 - t, prefactor e^{+z/2}, kernel e^{-zu}
///   Interval  over u in (a,b), prefactor (b-a)^{1-2rho}
///   HalfLine  u = t/(1-t) over (0,inf), factor (1+u)^{-2rho}
///   Symmetric the Interval form on (-1,1)
/// All require p > 0.
enum class Representation { Unit = 1, Mirror = 2, Interval = 3, HalfLine = 4, Symmetric = 5 };

EvalResult m_pv_integral(const WhittakerParams& params, double z, Representation rep,
                         double a = 0.0, double b = 1.0, const QuadratureSpec& spec = {});

/// Integral of u^{r-1/2} K_{v+1/2}(u) over (0, inf):
/// 2^{r-3/2} Gamma((r-v)/2) Gamma((r+v+1)/2). Requires r - v > 0, r + v > -1.
double bessel_moment(double r, double v);
/// The same moment by direct quadrature.
EvalResult bessel_moment_numeric(double r, double v, const QuadratureSpec& spec = {});

/// Mellin transform in p of M_{p,v,lambda,rho}(z); params.p is ignored.
struct MellinQuery {
  WhittakerParams params;
  double r = 1.0;
  double z = 1.0;

  // r - v > 0, r + v > -1, rho + r +- lambda > 1/2, z > 0.
  void validate() const;
};

enum class MellinForm {
  Corrected,     // consistent with the v = 0 reduction and with quadrature
  PaperLiteral,  // the closed form exactly as originally printed
};

EvalResult mellin_numeric(const MellinQuery& query, const QuadratureSpec& spec = {});
EvalResult mellin_closed_form(const MellinQuery& query, MellinForm form = MellinForm::Corrected);
/// v = 0 closed form z^{-r} Gamma(r) B(rho+r-lambda+1/2, rho+r+lambda+1/2)
/// / B(rho-lambda+1/2, rho+lambda+1/2) M_{lambda,rho+r}(z).
EvalResult mellin_closed_form_v0(const MellinQuery& query);

/// Integral of x^{delta-1} e^{-alpha x} M_{p,v,lambda,rho}(mu x) over (0, inf).
struct LaplaceQuery {
  WhittakerParams params;
  double delta = 1.0;
  double alpha = 1.0;
  double mu = 1.0;

  // 2 alpha > mu > 0, delta + rho > -1/2, params valid.
  void validate() const;
  double argument() const { return 2.0 * mu / (2.0 * alpha + mu); }
};

EvalResult laplace_closed_form(const LaplaceQuery& query, const QuadratureSpec& spec = {},
                               CoefficientCache* cache = nullptr);
/// p = v = 0 closed form with the Gauss 2F1.
EvalResult laplace_closed_form_2f1(const LaplaceQuery& query);
EvalResult laplace_numeric(const LaplaceQuery& query, const QuadratureSpec& spec = {},
                           CoefficientCache* cache = nullptr);

/// Right-hand side of the derivative formula
///   d^n/dz^n { e^{z/2} z^{-rho-1/2} M_{p,v,lambda,rho}(z) }
///     = (rho-lambda+1/2)_n / (2rho+1)_n e^{z/2} z^{-rho-n/2-1/2} M_{p,v,lambda-n/2,rho+n/2}(z).
EvalResult m_pv_derivative_formula(const WhittakerParams& params, double z, int n,
                                   const QuadratureSpec& spec = {},
                                   CoefficientCache* cache = nullptr);
/// e^{z/2} z^{-rho-1/2} M_{p,v,lambda,rho}(z), the function being differentiated.
EvalResult m_pv_normalized(const WhittakerParams& params, double z,
                           const QuadratureSpec& spec = {}, CoefficientCache* cache = nullptr);

/// Relative deviation between e^{-z/2} Phi_{p,v}(rho-lambda+1/2; 2rho+1; z)
/// and e^{z/2} Phi_{p,v}(rho+lambda+1/2; 2rho+1; -z), the real form of the
/// z -> -z transformation.
double transform_check(const WhittakerParams& params, double z, const QuadratureSpec& spec = {},
                       CoefficientCache* cache = nullptr);

/// |lhs - rhs| / max(|lhs|, |rhs|, 1e-300).
double relative_deviation(double lhs, double rhs);

}  // namespace wext
