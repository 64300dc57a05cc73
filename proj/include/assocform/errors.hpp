#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace assocform {

// Structural errors: malformed text, ring/variable/degree mismatches, bad
// indices, violated type invariants. The CLI maps these to exit code 1.
class StructuralError : public std::runtime_error {
 public:
  StructuralError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ParseError : public StructuralError {
 public:
  explicit ParseError(const std::string& message)
      : StructuralError("parse_error", message) {}
};

// Domain errors: inputs outside the mathematical domain of an operation
// (degenerate forms, non-regular sequences, quotient-dimension violations,
// missing Gorenstein certificates). The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace assocform
