#include "slabstack/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace slabstack {

namespace {
constexpr double kEntryLimit = 1e150;  // |entry|^2 must stay finite
}

TransferMatrix TransferMatrix::identity() {
  TransferMatrix t;
  t.m[0][0] = 1.0;
  t.m[0][1] = 0.0;
  t.m[1][0] = 0.0;
  t.m[1][1] = 1.0;
  return t;
}

TransferMatrix TransferMatrix::slab(double theta) {
  TransferMatrix t;
  const double c = std::cosh(theta);
  const double s = std::sinh(theta);
  t.m[0][0] = c;
  t.m[0][1] = s;
  t.m[1][0] = s;
  t.m[1][1] = c;
  return t;
}

TransferMatrix TransferMatrix::gap(double phase) {
  TransferMatrix t;
  t.m[0][0] = std::polar(1.0, phase);
  t.m[0][1] = 0.0;
  t.m[1][0] = 0.0;
  t.m[1][1] = std::polar(1.0, -phase);
  return t;
}

TransferMatrix TransferMatrix::operator*(const TransferMatrix& rhs) const {
  TransferMatrix out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
    }
  }
  return out;
}

double TransferMatrix::max_abs() const {
  double v = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) v = std::max(v, std::abs(m[i][j]));
  return v;
}

double TransferMatrix::flux_violation() const {
  // R = T† g T − g with g = diag(1, −1)
  const std::complex<double> g[2] = {1.0, -1.0};
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::complex<double> r = 0.0;
      for (int k = 0; k < 2; ++k) r += std::conj(m[k][i]) * g[k] * m[k][j];
      if (i == j) r -= g[i];
      worst = std::max(worst, std::abs(r));
    }
  }
  const double scale = max_abs();
  return worst / std::max(1.0, scale * scale);
}

double TransferMatrix::transmission() const {
  const double a = std::abs(m[1][1]);
  if (a <= 1.0) return 1.0;
  return 1.0 / (a * a);
}

double TransferMatrix::eta() const {
  const double a = std::abs(m[1][1]);
  return (a <= 1.0) ? 0.0 : 2.0 * std::acosh(a);
}

PhaseSequence::PhaseSequence(std::vector<double> angles) : angles_(std::move(angles)) {
  for (double a : angles_) {
    if (!(a >= 0.0) || !(a < 2.0 * std::numbers::pi)) {
      throw std::domain_error("PhaseSequence: angles must lie in [0, 2*pi)");
    }
  }
}

PhaseSequence PhaseSequence::zeros(std::size_t n) {
  return PhaseSequence(std::vector<double>(n, 0.0));
}

MatrixStackResult simulate_matrix_stack(const SlabParams& params, const PhaseSequence& phases) {
  const TransferMatrix t = TransferMatrix::slab(params.theta);
  TransferMatrix total = t;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    total = total * TransferMatrix::gap(0.5 * phases[i]) * t;
    if (total.max_abs() > kEntryLimit) {
      throw std::overflow_error(
          "simulate_matrix_stack: matrix entries out of safe range; "
          "use the scalar log-domain path for large stacks");
    }
  }
  MatrixStackResult r;
  r.tau = total.transmission();
  r.eta = EtaValue(total.eta());
  return r;
}

}  // namespace slabstack
