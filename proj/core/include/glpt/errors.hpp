#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glpt {

// Precondition on the input graph or arguments does not hold
// (disconnected input, vertex out of range, bad construction parameter).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed graph6 / sparse6 text. offset() is the byte position of the
// first offending character; line() is the 1-based corpus line, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : std::runtime_error((line ? "line " + std::to_string(line) + ", " : std::string()) + "byte " +
                           std::to_string(offset) + ": " + what),
        reason_(what),
        offset_(offset),
        line_(line) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string reason_;
  std::size_t offset_;
  std::size_t line_;
};

// A computation would exceed a configured budget (e.g. the longest-path
// enumeration cap). Never a silent truncation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A plan or path does not fit its host (non-adjacent step, repeated vertex,
// mismatched indices).
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace glpt
