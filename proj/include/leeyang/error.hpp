#pragma once

#include <stdexcept>
#include <string>

namespace leeyang {

/// Category carried by every library error; the CLI reports it verbatim in
/// its JSON error document.
enum class ErrorKind {
  Domain,       // input outside the mathematical domain (|alpha| >= 1, p <= 0, ...)
  Shape,        // length / size / parity mismatch
  Resource,     // configured cap exceeded (word length, precision, matrix size)
  Numerical,    // solver failure or a certificate that did not hold
  Config,       // malformed or incomplete configuration
  Io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Numerical: return "numerical";
    case ErrorKind::Config: return "config";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace leeyang
