#pragma once

#include <stdexcept>
#include <string>

namespace slabstack {

/// Quadrature or grid refinement failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent computation routes disagreed beyond tolerance.
class CrossCheckError : public std::runtime_error {
 public:
  explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested computation exceeds a configured resource bound.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace slabstack
