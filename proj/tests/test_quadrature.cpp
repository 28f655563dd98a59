#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracle_values.hpp"
#include "wext/errors.hpp"
#include "wext/quadrature.hpp"
#include "wext/special_kernels.hpp"

using namespace wext;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

struct Case {
  const char* name;
  double exact;
  QuadResult (*run)(const QuadratureSpec&);
};

// Closed-form corpus used by the honesty and budget checks.
const Case kCorpus[] = {
    {"one", 1.0, [](const QuadratureSpec& s) { return integrate_01([](double, double) { return 1.0; }, s); }},
    {"arcsine", std::numbers::pi,
     [](const QuadratureSpec& s) {
       return integrate_01([](double t, double tc) { return 1.0 / std::sqrt(t * tc); }, s);
     }},
    {"log", -1.0, [](const QuadratureSpec& s) { return integrate_01([](double t, double) { return std::log(t); }, s); }},
    {"beta(0.3,2.2)", 0.0,
     [](const QuadratureSpec& s) {
       return integrate_01([](double t, double tc) { return std::pow(t, -0.7) * std::pow(tc, 1.2); }, s);
     }},
    {"wext::gamma(2.5)/1.3^2.5", 0.0,
     [](const QuadratureSpec& s) {
       return integrate_semi_inf([](double u) { return std::exp(1.5 * std::log(u) - 1.3 * u); }, s);
     }},
    {"1/(1+u^2)", std::numbers::pi / 2.0,
     [](const QuadratureSpec& s) { return integrate_semi_inf([](double u) { return 1.0 / (1.0 + u * u); }, s); }},
    {"(u-2)(5-u)", 4.5,
     [](const QuadratureSpec& s) {
       return integrate_finite([](double, double da, double db) { return da * db; }, 2.0, 5.0, s);
     }},
};

double exact_of(const Case& c) {
  if (std::string(c.name) == "beta(0.3,2.2)") return beta(0.3, 2.2);
  if (std::string(c.name) == "wext::gamma(2.5)/1.3^2.5") return wext::gamma(2.5) * std::pow(1.3, -2.5);
  return c.exact;
}
}  // namespace

TEST_CASE("integrate_01 basics") {
  CHECK(rel(integrate_01([](double, double) { return 1.0; }).value, 1.0) < 1e-14);
  const auto r = integrate_01([](double t, double tc) { return 1.0 / std::sqrt(t * tc); });
  CHECK(r.converged);
  CHECK(rel(r.value, std::numbers::pi) < 1e-12);
}

TEST_CASE("integrate_01 damped beta oracle") {
  const auto r = integrate_01([](double t, double tc) {
    return std::exp(0.3 * std::log(t) + 1.1 * std::log(tc) - 0.5 / (t * tc));
  });
  CHECK(r.converged);
  CHECK(rel(r.value, oracle::kDampedBetaIntegral) < 1e-12);
}

TEST_CASE("integrate_semi_inf") {
  CHECK(rel(integrate_semi_inf([](double u) { return std::exp(-u); }).value, 1.0) < 1e-13);
  const auto g = integrate_semi_inf([](double u) { return std::exp(1.5 * std::log(u) - 1.3 * u); });
  CHECK(rel(g.value, std::pow(1.3, -2.5) * wext::gamma(2.5)) < 1e-12);
  const auto m = integrate_semi_inf([](double u) { return std::exp(1.5 * std::log(u) + log_bessel_k(1.0, u)); });
  CHECK(rel(m.value, std::sqrt(2.0) * wext::gamma(0.75) * wext::gamma(1.75)) < 1e-11);
  const auto split = integrate_semi_inf_split([](double u) { return std::exp(-u); }, 1.0);
  CHECK(rel(split.value, 1.0) < 1e-13);
}

TEST_CASE("integrate_finite") {
  CHECK(rel(integrate_finite([](double, double, double) { return 1.0; }, -1.0, 1.0).value, 2.0) < 1e-14);
  CHECK(rel(integrate_finite([](double, double da, double db) { return da * db; }, 2.0, 5.0).value, 4.5) < 1e-13);
  const auto r = integrate_finite(
      [](double u, double da, double db) {
        return std::exp(0.2 * std::log(da) + 0.4 * std::log(db) + 0.5 * u +
                        log_bessel_k(0.5, 1.4 / (da * db)));
      },
      -1.0, 1.0);
  CHECK(r.converged);
  CHECK(rel(r.value, oracle::kSymmetricBesselIntegral) < 1e-11);
}

TEST_CASE("affine substitution consistency") {
  // int_a^b f(u) du = (b-a) int_0^1 f(a + (b-a)t) dt
  const double a = 2.0, b = 5.0;
  auto f = [](double da, double db) { return std::exp(0.3 * std::log(da) - 0.6 * std::log(db) + 0.1 * da); };
  const auto direct = integrate_finite([&](double, double da, double db) { return f(da, db); }, a, b);
  const auto mapped = integrate_01([&](double t, double tc) { return (b - a) * f((b - a) * t, (b - a) * tc); });
  CHECK(rel(direct.value, mapped.value) < 2e-10);
}

TEST_CASE("error estimate is honest and budgets help") {
  for (const auto& c : kCorpus) {
    CAPTURE(c.name);
    const double exact = exact_of(c);
    double prev_err = std::numeric_limits<double>::infinity();
    for (int level = 3; level <= 10; ++level) {
      QuadratureSpec s;
      s.max_level = level;
      s.rel_tol = 1e-15;
      const auto r = c.run(s);
      const double err = std::fabs(r.value - exact);
      CHECK(err <= 10.0 * r.abs_error_estimate + 4e-15 * std::fabs(exact));
      // doubling the budget never makes things worse (beyond rounding)
      CHECK(err <= prev_err + 4e-15 * std::fabs(exact));
      prev_err = err;
    }
  }
}

TEST_CASE("converged implies the tolerance contract") {
  QuadratureSpec s;
  s.rel_tol = 1e-8;
  const auto r = integrate_01([](double t, double tc) { return std::pow(t, -0.9) * tc; }, s);
  if (r.converged) CHECK(r.abs_error_estimate <= std::max(s.rel_tol * std::fabs(r.value), s.abs_tol));
}

TEST_CASE("non-convergence is flagged") {
  QuadratureSpec s;
  s.max_level = 3;
  s.rel_tol = 1e-14;
  const auto r = integrate_01([](double t, double) { return std::pow(t, -0.999); }, s);
  CHECK_FALSE(r.converged);
  CHECK(r.abs_error_estimate >= 0.0);
}

TEST_CASE("non-finite integrand aborts") {
  CHECK_THROWS_AS(integrate_01([](double t, double) { return t > 0.3 ? std::nan("") : 1.0; }), Error);
  CHECK_THROWS_AS(integrate_semi_inf([](double u) { return u > 2.0 ? INFINITY : 1.0; }), Error);
}

TEST_CASE("spec validation") {
  QuadratureSpec s;
  s.rel_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), Error);
  s = {};
  s.max_level = 2;
  CHECK_THROWS_AS(s.validate(), Error);
}

TEST_CASE("deterministic") {
  auto f = [](double t, double tc) { return std::exp(std::log(t) * 0.2 - 0.3 / tc); };
  CHECK(integrate_01(f).value == integrate_01(f).value);
}
