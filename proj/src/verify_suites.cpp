#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "wext/errors.hpp"
#include "wext/extended_beta.hpp"
#include "wext/extended_hypergeometric.hpp"
#include "wext/special_kernels.hpp"
#include "wext/verify.hpp"
#include "wext/whittaker.hpp"

namespace wext {

namespace {

struct SuiteContext {
  std::mt19937_64 rng;
  const VerifyOptions& options;
  IdentityReport& report;
  CoefficientCache cache;

  const QuadratureSpec& spec() const { return options.spec; }

  // Evaluates one (lhs, rhs) pair; a library error marks the entry as failed.
  template <class F>
  void record(Point point, F&& eval) {
    SampleRecord rec;
    rec.point = std::move(point);
    try {
      const auto [lhs, rhs] = eval();
      rec.lhs = lhs;
      rec.rhs = rhs;
      rec.rel_dev = relative_deviation(lhs, rhs);
      if (std::isnan(rec.rel_dev)) rec.rel_dev = std::numeric_limits<double>::infinity();
    } catch (const Error&) {
      rec.lhs = rec.rhs = std::numeric_limits<double>::quiet_NaN();
      rec.rel_dev = std::numeric_limits<double>::infinity();
    }
    report.samples.push_back(std::move(rec));
  }
};

using Pair = std::pair<double, double>;

ParameterDomain whittaker_domain(double z_lo, double z_hi) {
  ParameterDomain d;
  d.range("p", 0.1, 2.0).range("v", 0.0, 2.0).range("lambda", -0.4, 0.4).range("rho", 0.0, 1.5)
      .range("z", z_lo, z_hi);
  d.require("rho + lambda > -1/2", [](const Point& x) { return x.at("rho") + x.at("lambda") > -0.5; });
  d.require("rho - lambda > -1/2", [](const Point& x) { return x.at("rho") - x.at("lambda") > -0.5; });
  return d;
}

WhittakerParams whittaker_of(const Point& x) {
  return {x.at("p"), x.at("v"), x.at("lambda"), x.at("rho")};
}

// Richardson-extrapolated central difference of order n (1 or 2).
template <class F>
double richardson_derivative(F&& f, double z, int n) {
  const double h = n == 1 ? 1e-5 : 1e-3;
  auto diff = [&](double s) {
    return n == 1 ? (f(z + s) - f(z - s)) / (2.0 * s) : (f(z + s) - 2.0 * f(z) + f(z - s)) / (s * s);
  };
  return (4.0 * diff(0.5 * h) - diff(h)) / 3.0;
}

// Each specialization in the lattice, keyed by the "relation" entry.
void suite_reduction_lattice(SuiteContext& cx, int n) {
  ParameterDomain d;
  d.range("a", 0.2, 3.0).range("b", 0.2, 3.0).range("c", 0.5, 6.0).range("p", 0.05, 2.0)
      .range("z", -3.0, 3.0).range("x", -0.9, 0.9).range("lambda", -0.4, 0.4).range("rho", 0.0, 1.5);
  d.require("c - b >= 0.2", [](const Point& x) { return x.at("c") - x.at("b") >= 0.2; });
  const auto& s = cx.spec();
  auto* cache = &cx.cache;
  for (int i = 0; i < n; ++i) {
    Point x = d.sample(cx.rng);
    const int rel = i % 12;
    x["relation"] = rel;
    const double a = x["a"], b = x["b"], c = x["c"], p = x["p"], z = x["z"], w = x["x"];
    const double lam = x["lambda"], rho = x["rho"];
    cx.record(x, [&]() -> Pair {
      switch (rel) {
        case 0: return {beta_v(a, b, p, 0.0, s).value, beta_p(a, b, p, s).value};
        case 1: return {beta_pq(a, b, p, p, s).value, beta_p(a, b, p, s).value};
        case 2: return {phi_pv_series(b, c, p, 0.0, z, s, cache).value, phi_p(b, c, p, z, s, cache).value};
        case 3: return {phi_p(b, c, 0.0, z, s, cache).value, kummer_phi(b, c, z).value};
        case 4:
          return {m_pv({p, 0.0, lam, rho}, std::fabs(z), s, cache).value,
                  m_p(p, lam, rho, std::fabs(z), s, cache).value};
        case 5:
          return {m_pv({0.0, 0.0, lam, rho}, std::fabs(z), s, cache).value,
                  m_classical(lam, rho, std::fabs(z)).value};
        case 6:
          return {f_pv_series(a, b, c, p, 0.0, w, s, cache).value, f_p(a, b, c, p, w, s, cache).value};
        case 7: return {f_p(a, b, c, 0.0, w, s, cache).value, gauss_2f1(a, b, c, w).value};
        case 8: return {phi_pq(b, c, p, p, z, s, cache).value, phi_p(b, c, p, z, s, cache).value};
        case 9: return {f_pq(a, b, c, p, p, w, s, cache).value, f_p(a, b, c, p, w, s, cache).value};
        case 10:
          return {m_pq(p, p, lam, rho, std::fabs(z), s, cache).value,
                  m_p(p, lam, rho, std::fabs(z), s, cache).value};
        default: return {beta_p(a, b, 0.0, s).value, beta(a, b)};
      }
    });
  }
}

// "function": 0 Phi_{p,v}, 1 F_{p,v}, 2 Phi_p, 3 F_p, 4 Phi_{p,q}, 5 F_{p,q}
void suite_series_vs_integral(SuiteContext& cx, int n) {
  ParameterDomain d;
  d.range("a", 0.2, 3.0).range("b", 0.2, 3.0).range("c", 0.5, 6.0).range("p", 0.05, 2.0)
      .range("q", 0.05, 2.0).range("v", 0.0, 2.0).range("z", -4.0, 4.0).range("x", -0.9, 0.9);
  d.require("c - b >= 0.2", [](const Point& x) { return x.at("c") - x.at("b") >= 0.2; });
  const auto& s = cx.spec();
  auto* cache = &cx.cache;
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    const double a = x.at("a"), b = x.at("b"), c = x.at("c"), p = x.at("p"), q = x.at("q");
    const double v = x.at("v"), z = x.at("z"), w = x.at("x");
    const BetaKernel kernels[] = {BetaKernel::bessel(p, v), BetaKernel::p_only(p), BetaKernel::pq(p, q)};
    for (int k = 0; k < 3; ++k) {
      Point xp = x;
      xp["function"] = 2 * k;
      cx.record(xp, [&]() -> Pair {
        return {phi_ext_series(b, c, kernels[k], z, s, cache).value,
                phi_ext_integral(b, c, kernels[k], z, s).value};
      });
      Point xf = x;
      xf["function"] = 2 * k + 1;
      cx.record(xf, [&]() -> Pair {
        return {f_ext_series(a, b, c, kernels[k], w, s, cache).value,
                f_ext_integral(a, b, c, kernels[k], w, s).value};
      });
    }
  }
}

void suite_phi_transformation(SuiteContext& cx, int n) {
  ParameterDomain d;
  d.range("b", 0.2, 3.0).range("c", 0.5, 6.0).range("p", 0.05, 2.0).range("v", 0.0, 2.0)
      .range("z", 0.5, 5.0);
  d.require("c - b >= 0.2", [](const Point& x) { return x.at("c") - x.at("b") >= 0.2; });
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    const double b = x.at("b"), c = x.at("c"), p = x.at("p"), v = x.at("v"), z = x.at("z");
    cx.record(x, [&]() -> Pair {
      return {phi_pv_series(b, c, p, v, z, cx.spec(), &cx.cache).value,
              std::exp(z) * phi_pv_series(c - b, c, p, v, -z, cx.spec(), &cx.cache).value};
    });
  }
}

// Forms: 0 series, 1/2/4/5 representations, 31/32/33 the interval form on
// (-1,1), (0,1), (2,5). Every pair is recorded.
void suite_rep_equivalence(SuiteContext& cx, int n) {
  const ParameterDomain d = whittaker_domain(0.2, 4.0);
  struct Form {
    int code;
    Representation rep;
    double a, b;
  };
  const Form forms[] = {{1, Representation::Unit, 0, 1},        {2, Representation::Mirror, 0, 1},
                        {31, Representation::Interval, -1, 1},  {32, Representation::Interval, 0, 1},
                        {33, Representation::Interval, 2, 5},   {4, Representation::HalfLine, 0, 1},
                        {5, Representation::Symmetric, 0, 1}};
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    const WhittakerParams w = whittaker_of(x);
    const double z = x.at("z");
    std::vector<std::pair<int, double>> values;
    bool failed = false;
    try {
      values.emplace_back(0, m_pv(w, z, cx.spec(), &cx.cache).value);
      for (const Form& f : forms)
        values.emplace_back(f.code, m_pv_integral(w, z, f.rep, f.a, f.b, cx.spec()).value);
    } catch (const Error&) {
      failed = true;
    }
    if (failed) {
      cx.record(x, []() -> Pair { throw Error(ErrorCode::Domain, "evaluation failed"); });
      continue;
    }
    for (std::size_t j = 0; j < values.size(); ++j) {
      for (std::size_t k = j + 1; k < values.size(); ++k) {
        Point xp = x;
        xp["lhs_form"] = values[j].first;
        xp["rhs_form"] = values[k].first;
        cx.record(xp, [&]() -> Pair { return {values[j].second, values[k].second}; });
      }
    }
  }
}

void suite_whittaker_transformation(SuiteContext& cx, int n) {
  const ParameterDomain d = whittaker_domain(0.5, 5.0);
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    cx.record(x, [&]() -> Pair {
      const WhittakerParams w = whittaker_of(x);
      return {m_pv(w, x.at("z"), cx.spec(), &cx.cache).value,
              m_pv_alt(w, x.at("z"), cx.spec(), &cx.cache).value};
    });
  }
}

void suite_bessel_moment(SuiteContext& cx, int n) {
  ParameterDomain d;
  d.range("v", 0.0, 3.0).range("r", 0.05, 8.0);
  d.require("0 < r - v <= 5", [](const Point& x) {
    const double g = x.at("r") - x.at("v");
    return g >= 0.05 && g <= 5.0;
  });
  d.require("r + v <= 10", [](const Point& x) { return x.at("r") + x.at("v") <= 10.0; });
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    cx.record(x, [&]() -> Pair {
      return {bessel_moment_numeric(x.at("r"), x.at("v"), cx.spec()).value,
              bessel_moment(x.at("r"), x.at("v"))};
    });
  }
}

ParameterDomain mellin_domain(bool v_zero) {
  ParameterDomain d;
  d.range("v", 0.0, v_zero ? 0.0 : 1.5).range("r", 0.5, 4.0).range("lambda", -0.4, 0.4)
      .range("rho", 0.0, 1.5).range("z", 0.5, 3.0);
  d.require("0.5 <= r - v <= 2.5", [](const Point& x) {
    const double g = x.at("r") - x.at("v");
    return g >= 0.5 && g <= 2.5;
  });
  d.require("rho + r +- lambda > 1/2", [](const Point& x) {
    return x.at("rho") + x.at("r") - std::fabs(x.at("lambda")) > 0.5;
  });
  return d;
}

MellinQuery mellin_of(const Point& x) {
  return {{0.0, x.at("v"), x.at("lambda"), x.at("rho")}, x.at("r"), x.at("z")};
}

// The point also logs the deviation of the closed form as originally printed.
void suite_mellin_theorem(SuiteContext& cx, int n) {
  const ParameterDomain d = mellin_domain(false);
  for (int i = 0; i < n; ++i) {
    Point x = d.sample(cx.rng);
    const MellinQuery q = mellin_of(x);
    double numeric = 0.0;
    double literal_dev = std::numeric_limits<double>::infinity();
    try {
      numeric = mellin_numeric(q, cx.spec()).value;
      literal_dev = relative_deviation(numeric, mellin_closed_form(q, MellinForm::PaperLiteral).value);
    } catch (const Error&) {
    }
    x["literal_rel_dev"] = literal_dev;
    cx.record(x, [&]() -> Pair {
      const MellinForm form = cx.options.paper_literal ? MellinForm::PaperLiteral : MellinForm::Corrected;
      return {mellin_numeric(q, cx.spec()).value, mellin_closed_form(q, form).value};
    });
  }
}

void suite_mellin_v0(SuiteContext& cx, int n) {
  const ParameterDomain d = mellin_domain(true);
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    cx.record(x, [&]() -> Pair {
      const MellinQuery q = mellin_of(x);
      return {mellin_numeric(q, cx.spec()).value, mellin_closed_form_v0(q).value};
    });
  }
}

ParameterDomain laplace_domain(bool classical) {
  ParameterDomain d;
  d.range("p", classical ? 0.0 : 0.1, classical ? 0.0 : 2.0)
      .range("v", 0.0, classical ? 0.0 : 2.0)
      .range("lambda", -0.4, 0.4)
      .range("rho", 0.0, 1.5)
      .range("delta", 0.2, 2.5)
      .range("alpha", 0.2, 3.0)
      .range("mu", 0.2, 2.0);
  d.require("2 alpha > mu (with margin 2 alpha >= 1.5 mu)",
            [](const Point& x) { return 2.0 * x.at("alpha") >= 1.5 * x.at("mu"); });
  return d;
}

LaplaceQuery laplace_of(const Point& x) {
  return {{x.at("p"), x.at("v"), x.at("lambda"), x.at("rho")}, x.at("delta"), x.at("alpha"), x.at("mu")};
}

void suite_laplace_theorem(SuiteContext& cx, int n) {
  const ParameterDomain d = laplace_domain(false);
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    cx.record(x, [&]() -> Pair {
      const LaplaceQuery q = laplace_of(x);
      // Separate caches keep the two sides independent.
      CoefficientCache numeric_cache;
      return {laplace_numeric(q, cx.spec(), &numeric_cache).value,
              laplace_closed_form(q, cx.spec(), &cx.cache).value};
    });
  }
}

void suite_laplace_2f1(SuiteContext& cx, int n) {
  const ParameterDomain d = laplace_domain(true);
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    cx.record(x, [&]() -> Pair {
      const LaplaceQuery q = laplace_of(x);
      return {laplace_numeric(q, cx.spec(), &cx.cache).value, laplace_closed_form_2f1(q).value};
    });
  }
}

void suite_derivative_theorem(SuiteContext& cx, int n) {
  const ParameterDomain d = whittaker_domain(0.5, 4.0);
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    const WhittakerParams w = whittaker_of(x);
    const double z = x.at("z");
    for (int order = 1; order <= 2; ++order) {
      Point xp = x;
      xp["n"] = order;
      cx.record(xp, [&]() -> Pair {
        auto f = [&](double t) { return m_pv_normalized(w, t, cx.spec(), &cx.cache).value; };
        return {richardson_derivative(f, z, order),
                m_pv_derivative_formula(w, z, order, cx.spec(), &cx.cache).value};
      });
    }
  }
}

void suite_derivative_phi(SuiteContext& cx, int n) {
  ParameterDomain d;
  d.range("b", 0.2, 3.0).range("c", 0.5, 6.0).range("p", 0.05, 2.0).range("v", 0.0, 2.0)
      .range("z", -3.0, 3.0);
  d.require("c - b >= 0.2", [](const Point& x) { return x.at("c") - x.at("b") >= 0.2; });
  for (int i = 0; i < n; ++i) {
    const Point x = d.sample(cx.rng);
    const double b = x.at("b"), c = x.at("c"), p = x.at("p"), v = x.at("v"), z = x.at("z");
    for (int order = 1; order <= 2; ++order) {
      Point xp = x;
      xp["n"] = order;
      cx.record(xp, [&]() -> Pair {
        auto f = [&](double t) { return phi_pv_series(b, c, p, v, t, cx.spec(), &cx.cache).value; };
        return {richardson_derivative(f, z, order),
                phi_pv_derivative(b, c, p, v, z, order, cx.spec(), &cx.cache).value};
      });
    }
  }
}

struct SuiteDef {
  const char* id;
  int samples;
  double tolerance;
  void (*run)(SuiteContext&, int);
};

const SuiteDef kSuites[] = {
    {"reduction-lattice", 50, 1e-9, suite_reduction_lattice},
    {"phi-series-vs-integral", 30, 1e-8, suite_series_vs_integral},
    {"phi-transformation", 30, 1e-9, suite_phi_transformation},
    {"whittaker-rep-equivalence", 20, 1e-8, suite_rep_equivalence},
    {"whittaker-transformation", 30, 1e-9, suite_whittaker_transformation},
    {"bessel-moment", 20, 1e-8, suite_bessel_moment},
    {"mellin-theorem", 5, 1e-5, suite_mellin_theorem},
    {"mellin-corollary-v0", 5, 1e-6, suite_mellin_v0},
    {"laplace-theorem", 5, 1e-5, suite_laplace_theorem},
    {"laplace-corollary-2f1", 5, 1e-6, suite_laplace_2f1},
    {"derivative-theorem", 10, 1e-6, suite_derivative_theorem},
    {"derivative-phi", 10, 1e-6, suite_derivative_phi},
};

const SuiteDef* find_suite(const std::string& id) {
  for (const auto& s : kSuites)
    if (id == s.id) return &s;
  return nullptr;
}

const SuiteDef& require_suite(const std::string& id) {
  const SuiteDef* s = find_suite(id);
  if (!s) throw Error(ErrorCode::UnknownSuite, "unknown suite: " + id);
  return *s;
}

}  // namespace

const std::vector<std::string>& suite_catalogue() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.id);
    return out;
  }();
  return ids;
}

bool is_registered_suite(const std::string& id) { return find_suite(id) != nullptr; }
int default_samples(const std::string& id) { return require_suite(id).samples; }
double suite_tolerance(const std::string& id) { return require_suite(id).tolerance; }

IdentityReport run_suite(const std::string& id, int n_samples, std::uint64_t seed,
                         const VerifyOptions& options) {
  const SuiteDef& def = require_suite(id);
  if (n_samples < 1) throw_domain("n_samples must be >= 1");
  options.spec.validate();
  const auto start = std::chrono::steady_clock::now();

  IdentityReport report;
  report.suite = def.id;
  report.seed = seed;
  report.n_samples = n_samples;
  report.tolerance = def.tolerance;
  const std::size_t index = static_cast<std::size_t>(&def - kSuites);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  SuiteContext cx{std::mt19937_64(seq), options, report, CoefficientCache{}};
  def.run(cx, n_samples);

  report.max_rel_dev = 0.0;
  for (const auto& s : report.samples) report.max_rel_dev = std::max(report.max_rel_dev, s.rel_dev);
  report.passed = !report.samples.empty() && report.max_rel_dev <= report.tolerance;
  if (options.timing)
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

std::vector<IdentityReport> run_all(std::uint64_t seed, const VerifyOptions& options,
                                    int n_samples) {
  std::vector<IdentityReport> out;
  for (const auto& s : kSuites) {
    const int n = n_samples > 0 ? n_samples : s.samples;
    try {
      out.push_back(run_suite(s.id, n, seed, options));
    } catch (const Error&) {
      IdentityReport failed;
      failed.suite = s.id;
      failed.seed = seed;
      failed.n_samples = n;
      failed.tolerance = s.tolerance;
      failed.max_rel_dev = std::numeric_limits<double>::infinity();
      out.push_back(std::move(failed));
    }
  }
  return out;
}

}  // namespace wext
