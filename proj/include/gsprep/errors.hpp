#pragma once

#include <stdexcept>
#include <string>

namespace gsprep {

/// Bad user input or violated operation precondition (CLI exit code 2).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured resource limit was exceeded (CLI exit code 3).
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gsprep
