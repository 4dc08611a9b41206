#pragma once

#include <stdexcept>
#include <string>

namespace negabase {

enum class ErrorCode {
  invalid_input,     // malformed polynomial, expression, or argument
  no_root,           // no real root > 1 / interval does not isolate one root
  reducible,         // rational root or repeated factor detected
  field_mismatch,
  division_by_zero,
  out_of_domain,
  precondition,      // e.g. beta below the golden ratio where the branch needs it
  not_finite,        // orbit did not close within its cap
  cap_exceeded,      // return-word closure or word growth ran past its cap
  degenerate,        // fixed-point construction cannot grow
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace negabase
