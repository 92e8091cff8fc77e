#ifndef PUSHPULL_ERRORS_HPP
#define PUSHPULL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pushpull {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid network parameters (n, k, c out of range).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Parameters are structurally fine but outside the domain of the
// requested quantity (negative step counts, levels above the
// reachable fraction, second moments at n < 3, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Request would exceed a configured workload bound (big-integer
// table sizes, exhaustive enumeration limits).
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

// An absorbing state makes the requested expectation undefined.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what) : Error(what) {}
};

}  // namespace pushpull

#endif
