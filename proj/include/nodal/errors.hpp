#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

/// Malformed or out-of-domain input (unreadable file, degenerate support, ...).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A formula's precondition on the support set does not hold.
struct assumption_error : std::runtime_error {
  explicit assumption_error(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check the library performs on its own results failed.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nodal
