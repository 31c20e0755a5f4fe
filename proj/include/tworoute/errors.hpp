#ifndef TWOROUTE_ERRORS_HPP
#define TWOROUTE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tworoute {

/// No feasible solution exists for the given instance.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// An exponential solver was asked for an instance above its size guard.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read, written, or parsed.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tworoute

#endif
