#include "wext/wext.h"

#include <cmath>
#include <exception>
#include <map>
#include <new>
#include <set>
#include <string>
#include <vector>

#include "wext/errors.hpp"
#include "wext/extended_beta.hpp"
#include "wext/extended_hypergeometric.hpp"
#include "wext/special_kernels.hpp"
#include "wext/verify.hpp"
#include "wext/whittaker.hpp"

struct wext_context {
  wext::QuadratureSpec spec;
  wext::CoefficientCache cache;
  std::string last_error;
};

struct wext_report {
  std::string json;
  std::string csv;
  bool passed = false;
  std::size_t suites = 0;
};

namespace {

using wext::EvalResult;

struct Unknown {
  std::string what;
};
struct BadArgument {
  std::string what;
};

wext_status status_of(wext::ErrorCode code) {
  switch (code) {
    case wext::ErrorCode::Domain: return WEXT_DOMAIN;
    case wext::ErrorCode::Pole: return WEXT_POLE;
    case wext::ErrorCode::Parameter: return WEXT_PARAMETER;
    case wext::ErrorCode::Overflow: return WEXT_OVERFLOW;
    case wext::ErrorCode::NonFinite: return WEXT_NONFINITE;
    case wext::ErrorCode::UnknownSuite: return WEXT_UNKNOWN_SUITE;
    case wext::ErrorCode::SamplerStarvation: return WEXT_SAMPLER_STARVATION;
  }
  return WEXT_INTERNAL;
}

// Runs body, translating exceptions into a status and ctx->last_error.
template <class F>
wext_status guarded(wext_context* ctx, F&& body) {
  if (!ctx) return WEXT_INVALID_ARGUMENT;
  try {
    body();
    ctx->last_error.clear();
    return WEXT_OK;
  } catch (const wext::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const Unknown& e) {
    ctx->last_error = e.what;
    return WEXT_UNKNOWN_FUNCTION;
  } catch (const BadArgument& e) {
    ctx->last_error = e.what;
    return WEXT_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return WEXT_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return WEXT_INTERNAL;
  }
}

wext_result to_c(const EvalResult& r) {
  return {r.value, r.abs_error_estimate, r.work, r.converged ? 1 : 0, r.flags};
}

class Args {
 public:
  Args(const char* const* names, const double* values, std::size_t count) {
    if (count > 0 && (!names || !values)) throw BadArgument{"null parameter arrays"};
    for (std::size_t i = 0; i < count; ++i) {
      if (!names[i]) throw BadArgument{"null parameter name"};
      if (!map_.emplace(names[i], values[i]).second)
        throw BadArgument{std::string("duplicate parameter ") + names[i]};
    }
  }

  double need(const std::string& name) {
    auto it = map_.find(name);
    if (it == map_.end()) throw BadArgument{"missing parameter --" + name};
    used_.insert(name);
    return it->second;
  }

  double get(const std::string& name, double fallback) {
    return map_.count(name) ? need(name) : fallback;
  }

  void finish(const std::string& fn) const {
    for (const auto& [k, v] : map_)
      if (!used_.count(k)) throw BadArgument{"parameter --" + k + " is not used by " + fn};
  }

 private:
  std::map<std::string, double> map_;
  std::set<std::string> used_;
};

int flag_of(Args& args, const char* name, int lo, int hi) {
  const double x = args.get(name, 0.0);
  if (!(x >= lo && x <= hi) || x != std::floor(x))
    throw BadArgument{std::string("parameter --") + name + " out of range"};
  return static_cast<int>(x);
}

EvalResult eval_function(wext_context& ctx, const std::string& fn, Args& a) {
  const auto& s = ctx.spec;
  auto* c = &ctx.cache;
  EvalResult r;
  if (fn == "beta") {
    const double x = a.need("a"), y = a.need("b");
    r = {wext::beta(x, y), 0.0, true, 1, 0};
    r.abs_error_estimate = 1e-15 * std::fabs(r.value);
  } else if (fn == "beta_p") {
    const double x = a.need("a"), y = a.need("b");
    r = wext::beta_p(x, y, a.need("p"), s);
  } else if (fn == "beta_pq") {
    const double x = a.need("a"), y = a.need("b"), p = a.need("p");
    r = wext::beta_pq(x, y, p, a.need("q"), s);
  } else if (fn == "beta_v") {
    const double x = a.need("a"), y = a.need("b"), p = a.need("p");
    r = wext::beta_v(x, y, p, a.need("v"), s);
  } else if (fn == "phi") {
    const double b = a.need("b"), cc = a.need("c");
    r = wext::kummer_phi(b, cc, a.need("z"));
  } else if (fn == "2f1") {
    const double x = a.need("a"), b = a.need("b"), cc = a.need("c");
    r = wext::gauss_2f1(x, b, cc, a.need("z"));
  } else if (fn == "phi_p") {
    const double b = a.need("b"), cc = a.need("c"), p = a.need("p");
    r = wext::phi_p(b, cc, p, a.need("z"), s, c);
  } else if (fn == "phi_pq") {
    const double b = a.need("b"), cc = a.need("c"), p = a.need("p"), q = a.need("q");
    r = wext::phi_pq(b, cc, p, q, a.need("z"), s, c);
  } else if (fn == "phi_pv") {
    const double b = a.need("b"), cc = a.need("c"), p = a.need("p"), v = a.need("v"), z = a.need("z");
    r = flag_of(a, "path", 0, 1) == 1 ? wext::phi_pv_integral(b, cc, p, v, z, s)
                                       : wext::phi_pv_series(b, cc, p, v, z, s, c);
  } else if (fn == "f_p") {
    const double x = a.need("a"), b = a.need("b"), cc = a.need("c"), p = a.need("p");
    r = wext::f_p(x, b, cc, p, a.need("z"), s, c);
  } else if (fn == "f_pq") {
    const double x = a.need("a"), b = a.need("b"), cc = a.need("c"), p = a.need("p"), q = a.need("q");
    r = wext::f_pq(x, b, cc, p, q, a.need("z"), s, c);
  } else if (fn == "f_pv") {
    const double x = a.need("a"), b = a.need("b"), cc = a.need("c"), p = a.need("p"), v = a.need("v");
    const double z = a.need("z");
    r = flag_of(a, "path", 0, 1) == 1 ? wext::f_pv_integral(x, b, cc, p, v, z, s)
                                       : wext::f_pv_series(x, b, cc, p, v, z, s, c);
  } else if (fn == "m") {
    const double lam = a.need("lambda"), rho = a.need("rho");
    r = wext::m_classical(lam, rho, a.need("z"));
  } else if (fn == "m_p") {
    const double p = a.need("p"), lam = a.need("lambda"), rho = a.need("rho");
    r = wext::m_p(p, lam, rho, a.need("z"), s, c);
  } else if (fn == "m_pq") {
    const double p = a.need("p"), q = a.need("q"), lam = a.need("lambda"), rho = a.need("rho");
    r = wext::m_pq(p, q, lam, rho, a.need("z"), s, c);
  } else if (fn == "m_pv") {
    const wext::WhittakerParams w{a.need("p"), a.need("v"), a.need("lambda"), a.need("rho")};
    const double z = a.need("z");
    const int rep = flag_of(a, "rep", 0, 5);
    const double ua = a.get("ua", 0.0), ub = a.get("ub", 1.0);
    r = rep == 0 ? wext::m_pv(w, z, s, c)
                 : wext::m_pv_integral(w, z, static_cast<wext::Representation>(rep), ua, ub, s);
  } else if (fn == "bessel_k") {
    const double v = a.need("v");
    r = wext::bessel_k(v, a.need("z"));
  } else {
    throw Unknown{"unknown function: " + fn};
  }
  a.finish(fn);
  return r;
}

}  // namespace

extern "C" {

const char* wext_version(void) { return "0.1.0"; }

const char* wext_status_string(wext_status status) {
  switch (status) {
    case WEXT_OK: return "ok";
    case WEXT_DOMAIN: return "domain error";
    case WEXT_POLE: return "pole";
    case WEXT_PARAMETER: return "excluded parameter";
    case WEXT_OVERFLOW: return "overflow";
    case WEXT_NONFINITE: return "non-finite integrand";
    case WEXT_UNKNOWN_FUNCTION: return "unknown function";
    case WEXT_UNKNOWN_SUITE: return "unknown suite";
    case WEXT_SAMPLER_STARVATION: return "sampler starvation";
    case WEXT_INVALID_ARGUMENT: return "invalid argument";
    case WEXT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

wext_context* wext_context_create(void) { return new (std::nothrow) wext_context(); }

void wext_context_destroy(wext_context* ctx) { delete ctx; }

wext_status wext_context_set_quadrature(wext_context* ctx, double rel_tol, int max_level) {
  return guarded(ctx, [&] {
    wext::QuadratureSpec s = ctx->spec;
    s.rel_tol = rel_tol;
    s.max_level = max_level;
    s.validate();
    ctx->spec = s;
  });
}

const char* wext_context_last_error(const wext_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

wext_status wext_eval(wext_context* ctx, const char* function_id, const char* const* names,
                      const double* values, size_t count, wext_result* out) {
  return guarded(ctx, [&] {
    if (!function_id || !out) throw BadArgument{"null function id or output"};
    Args args(names, values, count);
    *out = to_c(eval_function(*ctx, function_id, args));
  });
}

wext_status wext_m_pv(wext_context* ctx, double p, double v, double lambda, double rho, double z,
                      wext_result* out) {
  return guarded(ctx, [&] {
    if (!out) throw BadArgument{"null output"};
    *out = to_c(wext::m_pv({p, v, lambda, rho}, z, ctx->spec, &ctx->cache));
  });
}

wext_status wext_mellin(wext_context* ctx, double v, double lambda, double rho, double r, double z,
                        wext_mellin_result* out) {
  return guarded(ctx, [&] {
    if (!out) throw BadArgument{"null output"};
    const wext::MellinQuery q{{0.0, v, lambda, rho}, r, z};
    q.validate();
    wext_mellin_result m{};
    m.corrected = to_c(wext::mellin_closed_form(q, wext::MellinForm::Corrected));
    m.literal = to_c(wext::mellin_closed_form(q, wext::MellinForm::PaperLiteral));
    if (v == 0.0) {
      m.v0 = to_c(wext::mellin_closed_form_v0(q));
      m.has_v0 = 1;
    }
    m.numeric = to_c(wext::mellin_numeric(q, ctx->spec));
    *out = m;
  });
}

wext_status wext_laplace(wext_context* ctx, double p, double v, double lambda, double rho,
                         double delta, double alpha, double mu, wext_laplace_result* out) {
  return guarded(ctx, [&] {
    if (!out) throw BadArgument{"null output"};
    const wext::LaplaceQuery q{{p, v, lambda, rho}, delta, alpha, mu};
    q.validate();
    wext_laplace_result l{};
    l.closed_form = to_c(wext::laplace_closed_form(q, ctx->spec, &ctx->cache));
    if (p == 0.0 && v == 0.0) {
      l.closed_form_2f1 = to_c(wext::laplace_closed_form_2f1(q));
      l.has_2f1 = 1;
    }
    wext::CoefficientCache numeric_cache;
    l.numeric = to_c(wext::laplace_numeric(q, ctx->spec, &numeric_cache));
    *out = l;
  });
}

size_t wext_suite_count(void) { return wext::suite_catalogue().size(); }

const char* wext_suite_name(size_t index) {
  const auto& ids = wext::suite_catalogue();
  return index < ids.size() ? ids[index].c_str() : nullptr;
}

wext_status wext_verify(wext_context* ctx, const char* suite, int n_samples, uint64_t seed,
                        int paper_literal, int timing, wext_report** out) {
  return guarded(ctx, [&] {
    if (!suite || !out) throw BadArgument{"null suite or output"};
    *out = nullptr;
    wext::VerifyOptions opt;
    opt.spec = ctx->spec;
    opt.paper_literal = paper_literal != 0;
    opt.timing = timing != 0;
    std::vector<wext::IdentityReport> reports;
    const std::string id = suite;
    if (id == "all") {
      reports = wext::run_all(seed, opt, n_samples);
    } else {
      const int n = n_samples > 0 ? n_samples : wext::default_samples(id);
      reports.push_back(wext::run_suite(id, n, seed, opt));
    }
    auto* rep = new wext_report();
    rep->json = wext::reports_to_json(reports);
    rep->csv = wext::reports_to_csv(reports);
    rep->passed = true;
    for (const auto& r : reports) rep->passed = rep->passed && r.passed;
    rep->suites = reports.size();
    *out = rep;
  });
}

const char* wext_report_json(const wext_report* report) { return report ? report->json.c_str() : ""; }
const char* wext_report_csv(const wext_report* report) { return report ? report->csv.c_str() : ""; }
int wext_report_passed(const wext_report* report) { return report && report->passed ? 1 : 0; }
size_t wext_report_suite_count(const wext_report* report) { return report ? report->suites : 0; }
void wext_report_destroy(wext_report* report) { delete report; }

}  // extern "C"
