#pragma once

#include <stdexcept>
#include <string>

namespace agot {

/// Root of the library's error hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural rule broken while mutating or querying a graph.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Heritage would exceed the configured recursion depth.
class DepthError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Invalid run configuration (bounds, temperature, cap).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Mock script file unusable: parse failure, duplicate key, empty.
class ScriptError : public Error {
 public:
  using Error::Error;
};

/// Completion payload failed schema or semantic validation.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Transport-level failure: network, rate limit exhaustion, script underrun.
class BackendError : public Error {
 public:
  using Error::Error;
};

/// Agent operation failed after its retry budget.
class AgentError : public Error {
 public:
  using Error::Error;
};

/// Dataset file missing, malformed, or schema-violating.
class DatasetError : public Error {
 public:
  using Error::Error;
};

}  // namespace agot
