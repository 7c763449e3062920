#pragma once

#include <stdexcept>
#include <string>

namespace blockfact {

/// Malformed or law-violating input: parse errors, failed construction
/// checks, size-cap violations, bad CLI parameters.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested verification did not pass (the data was well-formed but the
/// claimed property fails).
class VerifyFailure : public std::runtime_error {
 public:
  explicit VerifyFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blockfact
