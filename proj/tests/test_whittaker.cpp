#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "wext/errors.hpp"
#include "wext/extended_beta.hpp"
#include "wext/special_kernels.hpp"
#include "wext/whittaker.hpp"

using namespace wext;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

template <class F>
double richardson(F&& f, double z, int n) {
  const double h = n == 1 ? 1e-5 : 1e-3;
  auto d = [&](double s) {
    return n == 1 ? (f(z + s) - f(z - s)) / (2 * s) : (f(z + s) - 2 * f(z) + f(z - s)) / (s * s);
  };
  return (4 * d(h / 2) - d(h)) / 3;
}
}  // namespace

TEST_CASE("m_classical") {
  CHECK(rel(m_classical(0.0, 0.5, 1.0).value, 2.0 * std::sinh(0.5)) < 1e-15);
  const double z = 1e-3;
  CHECK(std::fabs(m_classical(0.3, 0.8, z).value / std::pow(z, 1.3) - 1.0) <= 0.01);
  CHECK(rel(m_classical(0.25, 0.75, 2.0).value, oracle::kWhittakerM) < 1e-14);
  CHECK_THROWS_AS(m_classical(0.0, -0.6, 1.0), Error);
  CHECK_THROWS_AS(m_classical(0.8, 0.2, 1.0), Error);
  CHECK_THROWS_AS(m_classical(0.0, 0.5, 0.0), Error);
}

TEST_CASE("m_pv and its reductions") {
  CHECK(rel(m_pv({0.0, 0.0, 0.3, 0.9}, 1.5).value, m_classical(0.3, 0.9, 1.5).value) < 1e-15);
  CHECK(rel(m_pv({0.6, 0.0, 0.3, 0.9}, 1.5).value, m_p(0.6, 0.3, 0.9, 1.5).value) < 1e-12);
  CHECK(rel(m_pq(0.6, 0.6, 0.3, 0.9, 1.5).value, m_p(0.6, 0.3, 0.9, 1.5).value) < 1e-12);
  const auto r = m_pv({0.8, 1.0, 0.25, 1.1}, 2.0);
  CHECK(rel(r.value, oracle::kMPV) < 1e-12);
  CHECK(rel(m_pv_integral({0.8, 1.0, 0.25, 1.1}, 2.0, Representation::Unit).value, r.value) < 1e-8);
  CHECK_THROWS_AS(m_pv({0.0, 0.5, 0.0, 1.0}, 1.0), Error);
  CHECK_THROWS_AS(m_pv({-0.1, 0.0, 0.0, 1.0}, 1.0), Error);
}

TEST_CASE("m_pv_alt") {
  const WhittakerParams w{0.8, 1.0, 0.25, 1.1};
  CHECK(rel(m_pv_alt(w, 2.0).value, m_pv(w, 2.0).value) < 1e-9);
  const WhittakerParams sym{0.5, 0.5, 0.0, 0.9};
  CHECK(rel(m_pv_alt(sym, 1.0).value, m_pv(sym, 1.0).value) < 1e-12);
  const WhittakerParams hard{1.0, 0.5, 0.4, 1.2};
  CHECK(rel(m_pv_alt(hard, 4.0).value, oracle::kMPVAlt) < 1e-8);
  CHECK(rel(m_pv(hard, 4.0).value, oracle::kMPVAlt) < 1e-12);
}

TEST_CASE("integral representations") {
  const WhittakerParams w{1.0, 0.5, 0.4, 1.2};
  const double z = 1.5;
  const double series = m_pv(w, z).value;
  const double reps[] = {
      m_pv_integral(w, z, Representation::Unit).value,
      m_pv_integral(w, z, Representation::Mirror).value,
      m_pv_integral(w, z, Representation::Interval, 2.0, 5.0).value,
      m_pv_integral(w, z, Representation::HalfLine).value,
      m_pv_integral(w, z, Representation::Symmetric).value,
  };
  for (double a : reps) {
    CHECK(rel(a, series) < 1e-8);
    for (double b : reps) CHECK(rel(a, b) < 1e-8);
  }
  // rep 5 is rep 3 on (-1, 1)
  CHECK(m_pv_integral(w, z, Representation::Symmetric).value ==
        m_pv_integral(w, z, Representation::Interval, -1.0, 1.0).value);
  CHECK_THROWS_AS(m_pv_integral({0.0, 0.0, 0.4, 1.2}, z, Representation::Unit), Error);
  CHECK_THROWS_AS(m_pv_integral(w, z, Representation::Interval, 1.0, 1.0), Error);
}

TEST_CASE("small-z asymptotics") {
  const WhittakerParams w{0.7, 0.6, 0.2, 0.9};
  const double z = 1e-4;
  const double limit = beta_v(w.b(), w.c() - w.b(), w.p, w.v).value / beta(w.b(), w.c() - w.b());
  CHECK(rel(m_pv(w, z).value / std::pow(z, w.rho + 0.5), limit) < 1e-3);
}

TEST_CASE("bessel moment") {
  CHECK(rel(bessel_moment(1.5, 0.0), wext::gamma(0.75) * wext::gamma(1.25)) < 1e-15);
  CHECK(rel(bessel_moment_numeric(2.0, 0.5).value, bessel_moment(2.0, 0.5)) < 1e-8);
  CHECK(rel(bessel_moment_numeric(0.5, 0.0).value, bessel_moment(0.5, 0.0)) < 1e-8);
  CHECK_THROWS_AS(bessel_moment(1.0, 1.0), Error);
}

TEST_CASE("Mellin transform") {
  const MellinQuery q{{0.0, 0.0, 0.2, 1.0}, 1.5, 1.0};
  const double numeric = mellin_numeric(q).value;
  CHECK(rel(mellin_closed_form(q).value, numeric) < 1e-5);
  CHECK(rel(mellin_closed_form_v0(q).value, numeric) < 1e-6);
  CHECK(rel(mellin_closed_form(q, MellinForm::PaperLiteral).value, numeric) > 1e-4);
  // duplication collapses the constant at v = 0
  CHECK(rel(std::exp2(0.5) * wext::gamma(0.75) * wext::gamma(1.25) / std::sqrt(M_PI), wext::gamma(1.5)) < 1e-14);

  const MellinQuery o{{0.0, 0.5, 0.0, 1.2}, 2.0, 0.5};
  CHECK(rel(mellin_numeric(o).value, oracle::kMellin) < 1e-8);
  CHECK(rel(mellin_closed_form(o).value, oracle::kMellin) < 1e-8);

  CHECK_THROWS_AS(mellin_numeric({{0.0, 1.0, 0.0, 1.0}, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(mellin_closed_form_v0({{0.0, 0.5, 0.0, 1.0}, 1.5, 1.0}), Error);
}

TEST_CASE("Laplace transform") {
  const LaplaceQuery c{{0.0, 0.0, 0.2, 0.8}, 1.0, 2.0, 1.0};
  CHECK(rel(laplace_closed_form(c).value, laplace_closed_form_2f1(c).value) < 1e-13);
  CHECK(rel(laplace_numeric(c).value, laplace_closed_form_2f1(c).value) < 1e-6);
  const LaplaceQuery q{{0.5, 0.5, 0.1, 1.0}, 1.5, 3.0, 1.0};
  CHECK(rel(laplace_numeric(q).value, laplace_closed_form(q).value) < 1e-5);
  const LaplaceQuery edge{{0.5, 0.5, 0.1, 1.0}, 1.5, 1.0, 1.0};
  CHECK(edge.argument() == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(laplace_closed_form({{0.5, 0.5, 0.1, 1.0}, 1.5, 0.5, 1.0}), Error);
  CHECK_THROWS_AS(laplace_closed_form_2f1(q), Error);
}

TEST_CASE("derivative formula") {
  const WhittakerParams w{0.8, 1.0, 0.25, 1.1};
  const double z = 1.5;
  CHECK(m_pv_derivative_formula(w, z, 0).value == doctest::Approx(m_pv_normalized(w, z).value).epsilon(1e-14));
  // the normalized function is Phi_{p,v} itself
  CHECK(rel(m_pv_normalized(w, z).value, phi_pv_series(w.b(), w.c(), w.p, w.v, z).value) < 1e-14);
  CoefficientCache cache;
  auto f = [&](double t) { return m_pv_normalized(w, t, {}, &cache).value; };
  CHECK(rel(richardson(f, z, 1), m_pv_derivative_formula(w, z, 1).value) < 1e-6);
  CHECK(rel(richardson(f, z, 2), m_pv_derivative_formula(w, z, 2).value) < 1e-4);
}

TEST_CASE("transform_check") {
  CHECK(transform_check({0.8, 1.0, 0.25, 1.1}, 2.0) <= 1e-9);
  CHECK(transform_check({1.5, 0.5, -0.3, 1.0}, 4.0) <= 1e-8);
  CHECK(transform_check({1.5, 0.5, -0.3, 1.0}, 1e-12) <= 1e-14);
}

TEST_CASE("relative_deviation") {
  CHECK(relative_deviation(0.0, 0.0) == 0.0);
  CHECK(relative_deviation(1.0, 2.0) == 0.5);
  CHECK(relative_deviation(1e-310, 0.0) <= 1.0);
}
