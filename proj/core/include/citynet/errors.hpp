#pragma once

#include <stdexcept>
#include <string>

namespace citynet {

// Rejected input values: empty labels, self-loops, infeasible parameters.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Query against a node id or label that was never registered.
struct LookupError : std::runtime_error {
  explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

// File open/read/write failures and structurally broken files.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace citynet
