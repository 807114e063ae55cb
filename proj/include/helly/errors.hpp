#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace helly {

/// Malformed input or a contract violation by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration guard was exceeded. The message echoes the limit.
class GuardError : public std::length_error {
 public:
  GuardError(const std::string& what, std::size_t limit)
      : std::length_error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/// A constructive step produced something a theorem rules out.
/// Carries a human-readable diagnostic; callers decide how to surface it.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration guards. Defaults can be overridden through the environment
/// (HELLY_NERVE_GUARD, HELLY_COLLAPSE_GUARD, HELLY_PIERCE_GUARD, HELLY_RADON_GUARD).
struct Guards {
  std::size_t nerve_sets = 20;
  std::size_t collapse_faces = std::size_t{1} << 14;
  std::size_t pierce_sets = 30;
  std::size_t radon_points = 12;

  static Guards from_env();
};

}  // namespace helly
