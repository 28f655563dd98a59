#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "wext/wext.h"

namespace {
struct Ctx {
  wext_context* c = wext_context_create();
  ~Ctx() { wext_context_destroy(c); }
};
}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(wext_version()) == "0.1.0");
  CHECK(std::string(wext_status_string(WEXT_DOMAIN)) == "domain error");
}

TEST_CASE("eval by name") {
  Ctx ctx;
  const char* names[] = {"a", "b"};
  const double values[] = {1.0, 1.0};
  wext_result r{};
  REQUIRE(wext_eval(ctx.c, "beta", names, values, 2, &r) == WEXT_OK);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.converged == 1);

  const char* mn[] = {"p", "v", "lambda", "rho", "z"};
  const double mv[] = {0.8, 1.0, 0.25, 1.1, 2.0};
  wext_result m{};
  REQUIRE(wext_eval(ctx.c, "m_pv", mn, mv, 5, &m) == WEXT_OK);
  wext_result direct{};
  REQUIRE(wext_m_pv(ctx.c, 0.8, 1.0, 0.25, 1.1, 2.0, &direct) == WEXT_OK);
  CHECK(m.value == direct.value);
}

TEST_CASE("error statuses") {
  Ctx ctx;
  wext_result r{};
  const char* names[] = {"a", "b", "p", "v"};
  const double values[] = {1.0, 1.0, -0.5, 0.0};
  CHECK(wext_eval(ctx.c, "beta_v", names, values, 4, &r) == WEXT_DOMAIN);
  CHECK(std::string(wext_context_last_error(ctx.c)) == "p must be > 0");
  CHECK(wext_eval(ctx.c, "nosuch", names, values, 0, &r) == WEXT_UNKNOWN_FUNCTION);
  CHECK(wext_eval(ctx.c, "beta", names, values, 1, &r) == WEXT_INVALID_ARGUMENT);
  CHECK(wext_eval(ctx.c, "beta", names, values, 3, &r) == WEXT_INVALID_ARGUMENT);
  CHECK(wext_eval(nullptr, "beta", names, values, 2, &r) == WEXT_INVALID_ARGUMENT);
  CHECK(wext_context_set_quadrature(ctx.c, -1.0, 12) == WEXT_DOMAIN);
  CHECK(wext_context_set_quadrature(ctx.c, 1e-9, 10) == WEXT_OK);
  CHECK(std::string(wext_context_last_error(ctx.c)).empty());
}

TEST_CASE("mellin and laplace") {
  Ctx ctx;
  wext_mellin_result m{};
  REQUIRE(wext_mellin(ctx.c, 0.0, 0.2, 1.0, 1.5, 1.0, &m) == WEXT_OK);
  CHECK(std::fabs(m.numeric.value - m.corrected.value) <= 1e-5 * std::fabs(m.corrected.value));
  CHECK(std::fabs(m.numeric.value - m.literal.value) > 1e-4 * std::fabs(m.numeric.value));
  CHECK(m.has_v0 == 1);
  CHECK(wext_mellin(ctx.c, 1.0, 0.2, 1.0, 1.0, 1.0, &m) == WEXT_DOMAIN);
  CHECK(std::string(wext_context_last_error(ctx.c)).find("r - v > 0") != std::string::npos);

  wext_laplace_result l{};
  REQUIRE(wext_laplace(ctx.c, 0.0, 0.0, 0.2, 0.8, 1.0, 2.0, 1.0, &l) == WEXT_OK);
  CHECK(l.has_2f1 == 1);
  CHECK(std::fabs(l.numeric.value - l.closed_form_2f1.value) <= 1e-6 * std::fabs(l.closed_form_2f1.value));
}

TEST_CASE("verify through the C API") {
  Ctx ctx;
  REQUIRE(wext_suite_count() == 12);
  CHECK(std::string(wext_suite_name(0)) == "reduction-lattice");
  CHECK(wext_suite_name(12) == nullptr);
  wext_report* rep = nullptr;
  REQUIRE(wext_verify(ctx.c, "bessel-moment", 5, 7, 0, 0, &rep) == WEXT_OK);
  CHECK(wext_report_passed(rep) == 1);
  CHECK(wext_report_suite_count(rep) == 1);
  CHECK(std::string(wext_report_json(rep)).find("\"suite\": \"bessel-moment\"") != std::string::npos);
  CHECK(std::string(wext_report_csv(rep)).rfind("suite,", 0) == 0);
  wext_report_destroy(rep);
  CHECK(wext_verify(ctx.c, "nosuch", 0, 1, 0, 0, &rep) == WEXT_UNKNOWN_SUITE);
  CHECK(rep == nullptr);
}
