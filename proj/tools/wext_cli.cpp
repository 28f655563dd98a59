// wext: evaluate extended Whittaker-family functions, run the identity
// suites, emit tables and compare Mellin/Laplace transforms.

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wext/wext.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotConverged = 3;

// Thrown for malformed input; message goes to stderr, exit code 2.
struct UsageError {
  std::string what;
};

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_number(const std::string& flag, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || errno == ERANGE)
    throw UsageError{"malformed value for --" + flag + ": '" + text + "'"};
  return x;
}

double rel_dev(double lhs, double rhs) {
  if (lhs == rhs) return 0.0;
  return std::fabs(lhs - rhs) / std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
}

struct Settings {
  std::optional<double> rel_tol;
  std::optional<int> max_level;
  std::string format;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
};

// key = value lines; '#' starts a comment.
Settings read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read config file " + path};
  Settings s;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string x) {
    const auto a = x.find_first_not_of(" \t\r");
    const auto b = x.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError{path + ":" + std::to_string(lineno) + ": expected key = value"};
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "rel_tol") s.rel_tol = parse_number(key, value);
    else if (key == "max_level") s.max_level = static_cast<int>(parse_number(key, value));
    else if (key == "format") s.format = value;
    else if (key == "output") s.output = value;
    else if (key == "seed") s.seed = static_cast<std::uint64_t>(parse_number(key, value));
    else if (key == "samples") s.samples = static_cast<int>(parse_number(key, value));
    else throw UsageError{path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'"};
  }
  return s;
}

class Context {
 public:
  Context() : ctx_(wext_context_create()) {
    if (!ctx_) throw UsageError{"cannot allocate context"};
  }
  ~Context() { wext_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  wext_context* get() const { return ctx_; }
  std::string error() const { return wext_context_last_error(ctx_); }

 private:
  wext_context* ctx_;
};

// Library failures: exit 2 for bad input, 3 for anything else.
struct LibraryError {
  wext_status status;
  std::string what;
};

void check(const Context& ctx, wext_status st) {
  if (st != WEXT_OK) throw LibraryError{st, ctx.error()};
}

int exit_code_for(wext_status st) {
  switch (st) {
    case WEXT_DOMAIN:
    case WEXT_POLE:
    case WEXT_PARAMETER:
    case WEXT_UNKNOWN_FUNCTION:
    case WEXT_UNKNOWN_SUITE:
    case WEXT_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitNotConverged;
  }
}

// Writes to --output when given, stdout otherwise.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{"cannot write " + path};
  out << text;
}

const std::vector<std::string> kParamNames = {"a",   "b",     "c",     "p",  "q",  "v",  "lambda", "rho",
                                              "z",   "r",     "delta", "alpha", "mu", "ua", "ub"};

struct Grid {
  std::string name;
  std::vector<double> values;
};

Grid parse_axis(const std::string& name, const std::string& text) {
  Grid g{name, {}};
  if (text.find(':') == std::string::npos) {
    g.values.push_back(parse_number(name, text));
    return g;
  }
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3 || text.back() == ':')
    throw UsageError{"malformed grid for --" + name + ": expected start:stop:count"};
  const double start = parse_number(name, parts[0]);
  const double stop = parse_number(name, parts[1]);
  const double count = parse_number(name, parts[2]);
  if (!(count >= 1) || count != std::floor(count) || count > 1e6)
    throw UsageError{"malformed grid for --" + name + ": count must be a positive integer"};
  const int n = static_cast<int>(count);
  if (n == 1 && start != stop)
    throw UsageError{"malformed grid for --" + name + ": count 1 needs start == stop"};
  for (int i = 0; i < n; ++i)
    g.values.push_back(n == 1 ? start : start + (stop - start) * i / (n - 1));
  return g;
}

// Odometer over the grid axes; the last axis varies fastest.
bool advance(std::vector<std::size_t>& idx, const std::vector<Grid>& axes) {
  for (std::size_t k = axes.size(); k-- > 0;) {
    if (++idx[k] < axes[k].values.size()) return true;
    idx[k] = 0;
  }
  return false;
}

struct EvalOutcome {
  wext_result result;
  wext_status status;
  std::string error;
};

EvalOutcome evaluate(const Context& ctx, const std::string& fn, const std::map<std::string, double>& params) {
  std::vector<const char*> names;
  std::vector<double> values;
  for (const auto& [k, v] : params) {
    names.push_back(k.c_str());
    values.push_back(v);
  }
  EvalOutcome o{};
  o.status = wext_eval(ctx.get(), fn.c_str(), names.data(), values.data(), names.size(), &o.result);
  if (o.status != WEXT_OK) o.error = ctx.error();
  return o;
}

std::string check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError{"unsupported --format '" + f + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Whittaker function toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(wext_version()));

  std::string config_path;
  std::optional<double> rel_tol;
  std::optional<int> max_level;
  std::string format;
  std::string output;
  app.add_option("--config", config_path, "key = value config file (also WHITTAKER_EXT_CONFIG)");
  app.add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
  app.add_option("--max-level", max_level, "quadrature maximum refinement level");
  app.add_option("--format", format, "json | csv | plain");
  app.add_option("--output", output, "write output to this path");

  std::map<std::string, std::string> raw;
  auto add_params = [&](CLI::App* sub, std::initializer_list<const char*> names) {
    for (const char* n : names) sub->add_option(std::string("--") + n, raw[n]);
  };

  std::string fn;
  std::string path = "series";
  int rep = 0;
  auto* eval = app.add_subcommand("eval", "evaluate a function at one point");
  eval->add_option("function", fn, "function id")->required();
  add_params(eval, {"a", "b", "c", "p", "q", "v", "lambda", "rho", "z", "ua", "ub"});
  eval->add_option("--path", path, "series | integral");
  eval->add_option("--rep", rep, "integral representation 1..5 for m_pv");

  std::string suite;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  bool paper_literal = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run an identity suite, or all of them");
  verify->add_option("suite", suite, "suite id or 'all'")->required();
  verify->add_option("--samples", samples, "samples per suite");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_flag("--paper-literal", paper_literal, "use the Mellin closed form as originally printed");
  verify->add_flag("--timing", timing, "record runtime_ms");

  std::string table_fn;
  auto* table = app.add_subcommand("table", "tabulate a function over a parameter grid");
  table->add_option("function", table_fn, "function id")->required();
  add_params(table, {"a", "b", "c", "p", "q", "v", "lambda", "rho", "z", "ua", "ub"});
  table->add_option("--path", path, "series | integral");
  table->add_option("--rep", rep, "integral representation 1..5 for m_pv");

  auto* mellin = app.add_subcommand("mellin", "Mellin transform in p: quadrature vs closed forms");
  add_params(mellin, {"v", "lambda", "rho", "r", "z"});
  auto* laplace = app.add_subcommand("laplace", "Laplace-type integral: quadrature vs closed forms");
  add_params(laplace, {"p", "v", "lambda", "rho", "delta", "alpha", "mu"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Settings cfg;
    if (config_path.empty())
      if (const char* env = std::getenv("WHITTAKER_EXT_CONFIG")) config_path = env;
    if (!config_path.empty()) cfg = read_config(config_path);
    if (!rel_tol) rel_tol = cfg.rel_tol;
    if (!max_level) max_level = cfg.max_level;
    if (format.empty()) format = cfg.format;
    if (output.empty()) output = cfg.output;
    if (!seed) seed = cfg.seed;
    if (!samples) samples = cfg.samples;

    Context ctx;
    if (rel_tol || max_level)
      check(ctx, wext_context_set_quadrature(ctx.get(), rel_tol.value_or(1e-10), max_level.value_or(12)));

    std::map<std::string, double> params;
    std::vector<Grid> axes;
    for (const auto& name : kParamNames) {
      auto it = raw.find(name);
      if (it == raw.end() || it->second.empty()) continue;
      if (table->parsed()) {
        axes.push_back(parse_axis(name, it->second));
      } else {
        params[name] = parse_number(name, it->second);
      }
    }
    auto need = [&](const char* name) {
      auto it = params.find(name);
      if (it == params.end()) throw UsageError{std::string("missing parameter --") + name};
      return it->second;
    };
    auto add_path = [&](std::map<std::string, double>& ps) {
      if (path == "integral") ps["path"] = 1;
      else if (path != "series") throw UsageError{"--path must be series or integral"};
      if (rep != 0) ps["rep"] = rep;
    };

    if (eval->parsed()) {
      const std::string f = check_format(format.empty() ? "plain" : format, {"plain", "json", "csv"});
      add_path(params);
      const EvalOutcome o = evaluate(ctx, fn, params);
      if (o.status != WEXT_OK) throw LibraryError{o.status, o.error};
      const wext_result& r = o.result;
      std::string text;
      if (f == "json") {
        nlohmann::ordered_json j{{"function", fn},
                                 {"value", r.value},
                                 {"abs_error_estimate", r.abs_error_estimate},
                                 {"work", r.work},
                                 {"converged", r.converged != 0}};
        text = j.dump(2) + "\n";
      } else if (f == "csv") {
        text = "function,value,abs_error_estimate,work,converged\n" + fn + "," + g17(r.value) + "," +
               g17(r.abs_error_estimate) + "," + std::to_string(r.work) + "," +
               (r.converged ? "true" : "false") + "\n";
      } else {
        text = "value = " + g17(r.value) + "\nabs_error_estimate = " + g17(r.abs_error_estimate) +
               "\nwork = " + std::to_string(r.work) + "\nconverged = " + (r.converged ? "true" : "false") +
               "\n";
      }
      emit(text, output);
      return r.converged ? kExitOk : kExitNotConverged;
    }

    if (verify->parsed()) {
      const std::string f = check_format(format.empty() ? "json" : format, {"json", "csv", "plain"});
      wext_report* report = nullptr;
      check(ctx, wext_verify(ctx.get(), suite.c_str(), samples.value_or(0), seed.value_or(1),
                             paper_literal ? 1 : 0, timing ? 1 : 0, &report));
      const bool passed = wext_report_passed(report) != 0;
      std::string text;
      if (f == "csv") {
        text = wext_report_csv(report);
      } else if (f == "json") {
        text = wext_report_json(report);
      } else {
        const auto doc = nlohmann::json::parse(wext_report_json(report));
        for (const auto& r : doc) {
          char line[256];
          std::snprintf(line, sizeof line, "%-28s %s  max_rel_dev %-12s tolerance %s\n",
                        r["suite"].get<std::string>().c_str(), r["passed"].get<bool>() ? "PASS" : "FAIL",
                        r["max_rel_dev"].is_number() ? g17(r["max_rel_dev"].get<double>()).c_str() : "inf",
                        g17(r["tolerance"].get<double>()).c_str());
          text += line;
        }
      }
      wext_report_destroy(report);
      emit(text, output);
      return passed ? kExitOk : kExitFailed;
    }

    if (table->parsed()) {
      const std::string f = check_format(format.empty() ? "csv" : format, {"csv", "json", "plain"});
      std::vector<std::string> header;
      for (const auto& a : axes) header.push_back(a.name);
      std::vector<std::size_t> idx(axes.size(), 0);
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      std::string csv;
      for (std::size_t i = 0; i < header.size(); ++i) csv += header[i] + ",";
      csv += "value,abs_error_estimate,converged\n";
      std::string plain;
      bool all_converged = true;
      do {
        std::map<std::string, double> ps;
        for (std::size_t i = 0; i < axes.size(); ++i) ps[axes[i].name] = axes[i].values[idx[i]];
        std::map<std::string, double> call = ps;
        add_path(call);
        const EvalOutcome o = evaluate(ctx, table_fn, call);
        if (o.status != WEXT_OK) throw LibraryError{o.status, o.error};
        all_converged = all_converged && o.result.converged;
        nlohmann::ordered_json row;
        std::string line;
        for (std::size_t i = 0; i < axes.size(); ++i) {
          const double x = axes[i].values[idx[i]];
          row[axes[i].name] = x;
          line += g17(x) + ",";
        }
        row["value"] = o.result.value;
        row["abs_error_estimate"] = o.result.abs_error_estimate;
        row["converged"] = o.result.converged != 0;
        rows.push_back(row);
        line += g17(o.result.value) + "," + g17(o.result.abs_error_estimate) + "," +
                (o.result.converged ? "true" : "false");
        csv += line + "\n";
        for (char& ch : line)
          if (ch == ',') ch = ' ';
        plain += line + "\n";
      } while (advance(idx, axes));
      emit(f == "json" ? rows.dump(2) + "\n" : f == "csv" ? csv : plain, output);
      return all_converged ? kExitOk : kExitNotConverged;
    }

    if (mellin->parsed()) {
      const std::string f = check_format(format.empty() ? "plain" : format, {"plain", "json"});
      wext_mellin_result m{};
      check(ctx, wext_mellin(ctx.get(), need("v"), need("lambda"), need("rho"), need("r"), need("z"), &m));
      nlohmann::ordered_json j{{"numeric", m.numeric.value},
                               {"corrected", m.corrected.value},
                               {"paper_literal", m.literal.value},
                               {"rel_dev_numeric_corrected", rel_dev(m.numeric.value, m.corrected.value)},
                               {"rel_dev_numeric_paper_literal", rel_dev(m.numeric.value, m.literal.value)},
                               {"rel_dev_corrected_paper_literal", rel_dev(m.corrected.value, m.literal.value)}};
      if (m.has_v0) {
        j["v0_closed_form"] = m.v0.value;
        j["rel_dev_numeric_v0"] = rel_dev(m.numeric.value, m.v0.value);
      }
      j["converged"] = m.numeric.converged != 0;
      std::string text;
      if (f == "json") {
        text = j.dump(2) + "\n";
      } else {
        for (const auto& [k, v] : j.items())
          text += k + " = " + (v.is_boolean() ? (v.get<bool>() ? "true" : "false") : g17(v.get<double>())) + "\n";
      }
      emit(text, output);
      return m.numeric.converged ? kExitOk : kExitNotConverged;
    }

    if (laplace->parsed()) {
      const std::string f = check_format(format.empty() ? "plain" : format, {"plain", "json"});
      wext_laplace_result l{};
      check(ctx, wext_laplace(ctx.get(), need("p"), need("v"), need("lambda"), need("rho"), need("delta"),
                              need("alpha"), need("mu"), &l));
      nlohmann::ordered_json j{{"numeric", l.numeric.value},
                               {"closed_form", l.closed_form.value},
                               {"rel_dev_numeric_closed_form", rel_dev(l.numeric.value, l.closed_form.value)}};
      if (l.has_2f1) {
        j["closed_form_2f1"] = l.closed_form_2f1.value;
        j["rel_dev_numeric_2f1"] = rel_dev(l.numeric.value, l.closed_form_2f1.value);
        j["rel_dev_closed_form_2f1"] = rel_dev(l.closed_form.value, l.closed_form_2f1.value);
      }
      j["converged"] = l.numeric.converged != 0;
      std::string text;
      if (f == "json") {
        text = j.dump(2) + "\n";
      } else {
        for (const auto& [k, v] : j.items())
          text += k + " = " + (v.is_boolean() ? (v.get<bool>() ? "true" : "false") : g17(v.get<double>())) + "\n";
      }
      emit(text, output);
      return l.numeric.converged ? kExitOk : kExitNotConverged;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what << "\n";
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what << "\n";
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotConverged;
  }
  return kExitUsage;
}
