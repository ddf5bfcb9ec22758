#pragma once

#include <stdexcept>
#include <string>

namespace anandan {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A line-source field was evaluated inside its core radius.
class SingularityViolation : public Error {
 public:
  using Error::Error;
};

/// A derivative was requested on (or within edge tolerance of) a uniform block face.
class BoundaryEvaluation : public Error {
 public:
  using Error::Error;
};

class QuadratureNonConvergence : public Error {
 public:
  using Error::Error;
};

class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

class ConfigNotApplicable : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document that violates the schema. The message names the offending key.
class SchemaError : public Error {
 public:
  SchemaError(std::string key, const std::string& what)
      : Error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace anandan
