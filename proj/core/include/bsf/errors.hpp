// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bsf {

// Failure categories. Sweeps record the short tag of a per-point failure in
// the output row instead of aborting, so the codes are part of the CSV format.
enum class ErrorCode {
  DomainError,
  NonConvergence,
  NoBracket,
  DivergentValue,
  DivergentOccupation,
  NormalizationFailure,
  ModelMismatch,
  DegenerateFit,
  RangeError,
  ConfigError,
  IoError,
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

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, std::string(to_string(code)) + ": " + msg);
}

}  // namespace bsf
