#pragma once

#include <stdexcept>
#include <string>

namespace hydro {

// Error categories surfaced by the CLI as one machine-parsable line:
//   error: <category>: <message>
enum class ErrorCategory {
  Config,       // bad flags, config file, or strategy constraints
  Positivity,   // non-positive density/pressure/internal energy
  Protocol,     // progress-counter misuse or synchronization deadlock
  TaskGraph,    // unsatisfiable dependency graph
  Equivalence,  // checksum mismatch between strategies/worker counts
  Io,           // file I/O
  Validation,   // a validation check failed
};

const char* to_string(ErrorCategory cat);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), cat_(cat) {}
  ErrorCategory category() const { return cat_; }

 private:
  ErrorCategory cat_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg)
      : Error(ErrorCategory::Config, msg) {}
};

// Carries which field went non-positive and, when known, the cell it
// happened in (strip-local index or grid (i,j), depending on the thrower).
class PositivityError : public Error {
 public:
  PositivityError(const std::string& field, const std::string& where)
      : Error(ErrorCategory::Positivity, field + " non-positive at " + where),
        field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class ProtocolError : public Error {
 public:
  explicit ProtocolError(const std::string& msg)
      : Error(ErrorCategory::Protocol, msg) {}
};

class DeadlockError : public Error {
 public:
  explicit DeadlockError(const std::string& msg)
      : Error(ErrorCategory::Protocol, msg) {}
};

class TaskGraphError : public Error {
 public:
  explicit TaskGraphError(const std::string& msg)
      : Error(ErrorCategory::TaskGraph, msg) {}
};

class EquivalenceError : public Error {
 public:
  explicit EquivalenceError(const std::string& msg)
      : Error(ErrorCategory::Equivalence, msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(ErrorCategory::Io, msg) {}
};

}  // namespace hydro
