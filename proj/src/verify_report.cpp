#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "wext/verify.hpp"

namespace wext {

namespace {

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (const auto& s : r.samples) {
      nlohmann::ordered_json point = nlohmann::ordered_json::object();
      for (const auto& [k, v] : s.point) point[k] = v;
      samples.push_back({{"point", point}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"rel_dev", s.rel_dev}});
    }
    doc.push_back({{"suite", r.suite},
                   {"seed", r.seed},
                   {"n_samples", r.n_samples},
                   {"tolerance", r.tolerance},
                   {"max_rel_dev", r.max_rel_dev},
                   {"passed", r.passed},
                   {"samples", samples},
                   {"runtime_ms", r.runtime_ms}});
  }
  return doc.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
  std::string out = "suite,seed,tolerance,point,lhs,rhs,rel_dev,passed\n";
  for (const auto& r : reports) {
    for (const auto& s : r.samples) {
      std::string point;
      for (const auto& [k, v] : s.point) {
        if (!point.empty()) point += ';';
        point += k + '=' + g17(v);
      }
      out += r.suite + ',' + std::to_string(r.seed) + ',' + g17(r.tolerance) + ',' + point + ',' +
             g17(s.lhs) + ',' + g17(s.rhs) + ',' + g17(s.rel_dev) + ',' +
             (s.rel_dev <= r.tolerance ? "true" : "false") + '\n';
    }
  }
  return out;
}

}  // namespace wext
