#pragma once
#include <stdexcept>
#include <string>

namespace groth {

// A bubble / K-bubble move whose preconditions fail.
struct IllegalMove : std::runtime_error {
  explicit IllegalMove(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration request above the configured size bound (CLI exit code 3).
struct BoundExceeded : std::domain_error {
  explicit BoundExceeded(const std::string& what) : std::domain_error(what) {}
};

// Exhaustive witness search came up empty (a refutation, not a bug).
struct NoWitness : std::runtime_error {
  explicit NoWitness(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace groth
