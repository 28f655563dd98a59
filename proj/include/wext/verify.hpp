#pragma once

// Randomized identity checks over sampled parameter domains.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wext/quadrature.hpp"

namespace wext {

/// A sampled parameter point, keyed by parameter name.
using Point = std::map<std::string, double>;

/// Uniform box ranges plus derived-constraint predicates. Draws are
/// rejected until every predicate holds.
class ParameterDomain {
 public:
  /// Maximum consecutive rejections before a draw gives up.
  static constexpr int kMaxRejections = 10000;

  ParameterDomain& range(const std::string& name, double lo, double hi);
  ParameterDomain& require(std::string description, std::function<bool(const Point&)> predicate);

  bool admits(const Point& point) const;
  /// Throws Error(SamplerStarvation) after kMaxRejections failed draws.
  Point sample(std::mt19937_64& rng) const;

 private:
  std::map<std::string, std::pair<double, double>> ranges_;
  std::vector<std::pair<std::string, std::function<bool(const Point&)>>> predicates_;
};

/// Uniform double in [0, 1) from the top 53 bits.
double unit_uniform(std::mt19937_64& rng);

struct SampleRecord {
  Point point;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_dev = 0.0;
};

struct IdentityReport {
  std::string suite;
  std::uint64_t seed = 0;
  int n_samples = 0;
  double tolerance = 0.0;
  double max_rel_dev = 0.0;
  bool passed = false;  // max_rel_dev <= tolerance
  std::vector<SampleRecord> samples;
  std::int64_t runtime_ms = 0;
};

struct VerifyOptions {
  QuadratureSpec spec;
  // Compare the Mellin transform against the closed form as originally printed.
  bool paper_literal = false;
  // Record wall-clock runtime; off by default so reports are reproducible.
  bool timing = false;
};

/// Registered suite ids, in report order.
const std::vector<std::string>& suite_catalogue();
bool is_registered_suite(const std::string& id);
int default_samples(const std::string& id);
double suite_tolerance(const std::string& id);

/// Runs one suite. Throws Error(UnknownSuite) for an unregistered id.
IdentityReport run_suite(const std::string& id, int n_samples, std::uint64_t seed,
                         const VerifyOptions& options = {});
/// Runs the whole catalogue, with default sample counts unless n_samples > 0.
/// A suite that throws is reported as failed; the rest still run.
std::vector<IdentityReport> run_all(std::uint64_t seed, const VerifyOptions& options = {},
                                    int n_samples = 0);

std::string reports_to_json(const std::vector<IdentityReport>& reports);
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

}  // namespace wext
