#pragma once

#include <stdexcept>
#include <string>

namespace wext {

enum class ErrorCode {
  Domain,             // argument outside the function's domain
  Pole,               // evaluation at a pole (gamma at a non-positive integer)
  Parameter,          // excluded parameter value (c a non-positive integer, ...)
  Overflow,           // result not representable
  NonFinite,          // quadrature integrand returned NaN or infinity
  UnknownSuite,
  SamplerStarvation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_domain(const std::string& what) { throw Error(ErrorCode::Domain, what); }

}  // namespace wext
