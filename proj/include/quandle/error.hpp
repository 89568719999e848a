#pragma once

#include <stdexcept>
#include <string>

namespace quandle {

// Error categories map one-to-one onto CLI exit statuses.
enum class ErrorKind {
  domain,      // bad argument values, size mismatches, cyclic substitutions
  parse,       // syntax errors in text or JSON inputs
  structural,  // well-formed input that violates a diagram/script invariant
  violation,   // a checked mathematical consequence failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

struct ParseError : Error {
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(ErrorKind::parse, line > 0 ? "line " + std::to_string(line) + ", column " +
                                               std::to_string(column) + ": " + what
                                         : what),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct StructuralError : Error {
  explicit StructuralError(const std::string& what) : Error(ErrorKind::structural, what) {}
};

struct ViolationError : Error {
  explicit ViolationError(const std::string& what) : Error(ErrorKind::violation, what) {}
};

}  // namespace quandle
