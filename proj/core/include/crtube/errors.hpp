#pragma once

#include <stdexcept>
#include <string>

namespace crtube {

/// Base class of every error raised by the library. Messages are prefixed
/// with the name of the module that raised them ("hol_solver: ...").
class Error : public std::runtime_error {
 public:
  Error(const std::string& module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(module) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Malformed input: bad JSON, schema violations, invalid parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold for the given data
/// (non-conical input to the hol solver, non-orbit input to the kernel chain, ...).
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed (closure violation, asymmetric second
/// form, non-uniform kernel dimensions, ...).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure hit its configured cap without deciding.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace crtube
