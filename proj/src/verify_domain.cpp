#include <cmath>

#include "wext/errors.hpp"
#include "wext/verify.hpp"

namespace wext {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ParameterDomain& ParameterDomain::range(const std::string& name, double lo, double hi) {
  if (!(hi >= lo)) throw_domain("range " + name + ": hi must be >= lo");
  ranges_[name] = {lo, hi};
  return *this;
}

ParameterDomain& ParameterDomain::require(std::string description,
                                          std::function<bool(const Point&)> predicate) {
  predicates_.emplace_back(std::move(description), std::move(predicate));
  return *this;
}

bool ParameterDomain::admits(const Point& point) const {
  for (const auto& [name, r] : ranges_) {
    auto it = point.find(name);
    if (it == point.end() || !(it->second >= r.first && it->second <= r.second)) return false;
  }
  for (const auto& pr : predicates_)
    if (!pr.second(point)) return false;
  return true;
}

Point ParameterDomain::sample(std::mt19937_64& rng) const {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Point p;
    for (const auto& [name, r] : ranges_) p[name] = r.first + (r.second - r.first) * unit_uniform(rng);
    bool ok = true;
    for (const auto& pr : predicates_) {
      if (!pr.second(p)) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  std::string names;
  for (const auto& pr : predicates_) names += (names.empty() ? "" : ", ") + pr.first;
  throw Error(ErrorCode::SamplerStarvation,
              "sampler starved: predicates rejected 10000 consecutive draws (" + names + ")");
}

}  // namespace wext
