#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace argdlpa {

// Violated structural invariant (bad framework, unknown name in a declared universe, ...).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Query precondition not met (argument not fixed, missing from a completion, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input exceeds a configured enumeration bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Direct and DL-PA engines returned different answers.
class EngineDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceSpan {
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, SourceSpan span, std::vector<std::string> expected,
             std::string found)
      : std::runtime_error(std::move(message)),
        span_(span),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  [[nodiscard]] const SourceSpan& span() const noexcept { return span_; }
  [[nodiscard]] const std::vector<std::string>& expected() const noexcept { return expected_; }
  [[nodiscard]] const std::string& found() const noexcept { return found_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
  std::string found_;
};

}  // namespace argdlpa
