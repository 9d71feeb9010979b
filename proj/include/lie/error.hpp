#pragma once

#include <stdexcept>
#include <string>

namespace lie {

// Error categories. Values coincide with the exit codes of the CLI.
enum class ErrorCode : int {
  argument = 2,     // unparseable or unsupported arguments
  unsupported = 3,  // valid input whose structure the operation cannot handle
  bad_input = 4,    // mathematically invalid input (singular, off-manifold, ...)
  numeric = 5,      // tolerance or convergence failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace lie
