#pragma once

#include <cstdint>

namespace wext {

/// Numeric output of every evaluation in the library.
///
/// `work` counts series terms or quadrature nodes, whichever the evaluation
/// path used. `value` is finite whenever `converged` is set.
struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  bool converged = false;
  std::int64_t work = 0;
  unsigned flags = 0;
};

/// Set when an alternating series lost more than six digits to cancellation.
inline constexpr unsigned kFlagCancellation = 1u << 0;

}  // namespace wext
