#pragma once

#include <stdexcept>
#include <string>

namespace onion {

// Malformed or unusable input: bad files, ids off the current structure,
// mismatched layer sets, and similar caller mistakes.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A solver was asked for more than its hard size cap allows.
struct CapError : std::runtime_error {
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace onion
