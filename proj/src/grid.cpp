#include "slabstack/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "slabstack/errors.hpp"

namespace slabstack {

void RecurrenceConfig::validate() const {
  if (!(delta_eta > 0.0) || !std::isfinite(delta_eta)) {
    throw std::invalid_argument("RecurrenceConfig: delta_eta must be positive");
  }
  if (quad_nodes < 8 || quad_nodes % 2 != 0) {
    throw std::invalid_argument("RecurrenceConfig: quad_nodes must be even and >= 8");
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("RecurrenceConfig: tolerance must be positive");
  }
  if (max_points < 2) {
    throw std::invalid_argument("RecurrenceConfig: max_points must be >= 2");
  }
}

void validate_grid(const GridFunction& grid, const char* context) {
  const auto& v = grid.values;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!std::isfinite(v[j])) {
      std::ostringstream os;
      os << context << ": non-finite value at grid point " << j << " (level " << grid.level
         << ")";
      throw ConvergenceError(os.str());
    }
  }
  if (grid.monotonicity == Monotonicity::None) return;
  const double sign = (grid.monotonicity == Monotonicity::NonIncreasing) ? 1.0 : -1.0;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    const double slack = 1e-9 + 1e-12 * std::max(std::fabs(v[j]), std::fabs(v[j + 1]));
    if (sign * (v[j + 1] - v[j]) > slack) {
      std::ostringstream os;
      os << context << ": monotonicity violated between grid points " << j << " and " << j + 1
         << " (level " << grid.level << ")";
      throw ConvergenceError(os.str());
    }
  }
}

GridInterpolant::GridInterpolant(const GridFunction& grid, Interpolation kind)
    : y_(grid.values),
      h_(grid.delta_eta),
      eta_max_(grid.eta_max()),
      slack_(1e-9 * (grid.eta_max() + 1.0)),
      kind_(kind) {
  if (grid.values.empty()) throw std::invalid_argument("GridInterpolant: empty grid");
  const std::size_t n = y_.size();
  if (kind_ != Interpolation::MonotoneCubic || n < 2) return;

  slope_.assign(n, 0.0);
  std::vector<double> del(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) del[j] = (y_[j + 1] - y_[j]) / h_;

  if (n == 2) {
    slope_[0] = slope_[1] = del[0];
    return;
  }
  // f_n is even in η: the left-edge derivative vanishes
  slope_[0] = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double a = del[j - 1];
    const double b = del[j];
    slope_[j] = (a * b > 0.0) ? 2.0 * a * b / (a + b) : 0.0;
  }
  // one-sided parabolic slope at the right edge, clamped for monotonicity
  double d = 0.5 * (3.0 * del[n - 2] - del[n - 3]);
  if (d * del[n - 2] <= 0.0) {
    d = 0.0;
  } else if (std::fabs(d) > 3.0 * std::fabs(del[n - 2])) {
    d = 3.0 * del[n - 2];
  }
  slope_[n - 1] = d;
}

double GridInterpolant::operator()(double eta) const {
  if (eta < -slack_ || eta > eta_max_ + slack_) {
    std::ostringstream os;
    os << "GridInterpolant: eta " << eta << " outside [0, " << eta_max_ << "]";
    throw std::domain_error(os.str());
  }
  if (y_.size() == 1) return y_[0];
  if (eta <= 0.0) return y_[0];
  if (eta >= eta_max_) return y_.back();

  const double pos = eta / h_;
  std::size_t j = static_cast<std::size_t>(pos);
  if (j >= y_.size() - 1) j = y_.size() - 2;
  const double t = pos - static_cast<double>(j);

  if (kind_ == Interpolation::Linear) {
    return y_[j] + t * (y_[j + 1] - y_[j]);
  }
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[j] + h10 * h_ * slope_[j] + h01 * y_[j + 1] + h11 * h_ * slope_[j + 1];
}

}  // namespace slabstack
