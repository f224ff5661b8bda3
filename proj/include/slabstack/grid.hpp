#pragma once

#include <cstdint>
#include <vector>

#include "slabstack/target.hpp"

namespace slabstack {

enum class Representation { Linear, LogOfPositive };

enum class Interpolation { MonotoneCubic, Linear };

struct RecurrenceConfig {
  double delta_eta = 0.005;  // rapidity grid spacing
  int quad_nodes = 128;      // M, even, >= 8: periodic trapezoid nodes per 2π
  Interpolation interpolation = Interpolation::MonotoneCubic;
  bool convergence_check = true;  // node-doubling probe at η = 2θ per level
  double tolerance = 1e-8;        // relative, at the final evaluation
  std::int64_t max_points = 100'000'000;

  void validate() const;  // throws std::invalid_argument
};

/// One intermediate average f_n sampled on the uniform rapidity grid
/// η_j = j·Δη, j = 0..size−1. Positive targets are stored as log f.
struct GridFunction {
  double delta_eta = 0.0;
  int level = 1;  // this is f_n for n = level
  Representation rep = Representation::Linear;
  Monotonicity monotonicity = Monotonicity::None;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double eta_max() const {
    return values.empty() ? 0.0 : delta_eta * static_cast<double>(values.size() - 1);
  }
};

/// Throws ConvergenceError if values are non-finite or break the declared
/// monotonicity beyond rounding slack.
void validate_grid(const GridFunction& grid, const char* context);

/// Interpolant over a GridFunction in stored space. MonotoneCubic is a
/// Fritsch–Carlson cubic Hermite: no overshoot on monotone data, zero slope
/// at η = 0 (f_n is an even function of η), one-sided clamped slope at the
/// right edge. Queries beyond the grid throw std::domain_error.
class GridInterpolant {
 public:
  GridInterpolant(const GridFunction& grid, Interpolation kind);

  double operator()(double eta) const;
  double eta_max() const { return eta_max_; }

 private:
  const std::vector<double>& y_;
  std::vector<double> slope_;
  double h_;
  double eta_max_;
  double slack_;
  Interpolation kind_;
};

}  // namespace slabstack
