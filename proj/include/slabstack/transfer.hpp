#pragma once

#include <complex>
#include <vector>

#include "slabstack/core.hpp"

namespace slabstack {

/// 2x2 complex transfer matrix acting on (rightward, leftward) amplitudes.
///
/// Pseudo-unitary: T† g T = g with g = diag(1, −1), so |entry(1,1)| = cosh θ_tot
/// and the transmission probability is 1/|entry(1,1)|².
struct TransferMatrix {
  std::complex<double> m[2][2] = {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}};

  static TransferMatrix identity();
  /// t(θ): the real symmetric slab matrix [[cosh θ, sinh θ], [sinh θ, cosh θ]].
  static TransferMatrix slab(double theta);
  /// D(φ): the diagonal gap matrix diag(e^{iφ}, e^{−iφ}).
  static TransferMatrix gap(double phase);

  TransferMatrix operator*(const TransferMatrix& rhs) const;

  double max_abs() const;
  /// Scaled residual of T† g T = g: ‖T†gT − g‖∞ / max(1, ‖T‖∞²).
  double flux_violation() const;
  /// 1/|m[1][1]|², clamped into (0, 1].
  double transmission() const;
  /// Stack rapidity 2·acosh(|m[1][1]|).
  double eta() const;
};

/// Ordered gap angles of a stack, one per gap, each in [0, 2π).
/// These are the ψ angles of the scalar composition law; the matrix route
/// applies them as half-angle gap matrices D(ψ/2).
class PhaseSequence {
 public:
  PhaseSequence() = default;
  explicit PhaseSequence(std::vector<double> angles);  // throws std::domain_error on out-of-range angles

  std::size_t size() const { return angles_.size(); }
  double operator[](std::size_t i) const { return angles_[i]; }
  const std::vector<double>& angles() const { return angles_; }

  static PhaseSequence zeros(std::size_t n);

 private:
  std::vector<double> angles_;
};

struct MatrixStackResult {
  double tau = 1.0;
  EtaValue eta;
};

/// Full transfer-matrix product t(θ)·D(ψ₁/2)·t(θ)·…·D(ψ_{N−1}/2)·t(θ) for an
/// N-slab stack; N = phases.size() + 1. Agrees with folding compose_eta over
/// the same angles to ~1e−12 relative in τ.
///
/// Throws std::overflow_error once entries leave the safe double range
/// (large N at small τ₁); use the scalar log-domain path there instead.
MatrixStackResult simulate_matrix_stack(const SlabParams& params, const PhaseSequence& phases);

}  // namespace slabstack
