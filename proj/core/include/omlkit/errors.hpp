#pragma once

#include <stdexcept>
#include <string>

namespace omlkit {

/// Malformed input: parse failures, unknown names, bad file contents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented operation precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A condition guaranteed by theory failed at runtime. Must never fire on
/// valid inputs; surfaced verbatim, never suppressed.
class InternalAlarm : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace omlkit
