#pragma once

#include <map>
#include <optional>
#include <vector>

#include "slabstack/core.hpp"

namespace slabstack {

/// Υ(τ₁) = (1/2π)∮ dφ (C + S cos φ)^{−1/2}: the per-slab factor of the upper
/// envelope on ⟨τ_N⟩. Periodic trapezoid starting at quad_nodes (≥ 16) with
/// node doubling until the change is ≤ 1e−12; ConvergenceError if the last
/// doubling still moves the value by more than 1e−10.
double upsilon(double tau1, int quad_nodes = 64);

/// Independent route: the same integral reduced to a complete elliptic
/// integral and evaluated by the arithmetic-geometric mean,
/// Υ = 1/AGM(e^θ, e^{−θ}). Oracle for the quadrature, never a substitute.
double upsilon_agm(double tau1);

/// Λ(τ₁) = min over C′ of f₃/f₂: 1/(2−τ₁) for τ₁ ≥ 2−√2, else √(τ₁ − τ₁²/4).
/// Per-slab factor of the lower envelope; Λ(τ₁) > τ₁ on (0, 1).
double lambda_bound(double tau1);

/// Envelopes and reference curves for N = 2..n_max (arrays indexed N−2):
/// log ⟨τ₂⟩ + (N−2) log Υ, log ⟨τ₂⟩ + (N−2) log Λ, N log τ₁ and the
/// ray-optics value. ⟨τ₂⟩ is anchored at the closed form.
struct BoundsReport {
  double tau1 = 1.0;
  double upsilon = 1.0;
  double lambda = 1.0;
  double log_tau2 = 0.0;  // anchor log ⟨τ₂⟩
  int n_begin = 2;
  std::vector<double> upper_envelope_log;
  std::vector<double> lower_envelope_log;
  std::vector<double> bk_lower_log;
  std::vector<double> ray_value;

  double upper_at(int n) const { return upper_envelope_log.at(static_cast<std::size_t>(n - n_begin)); }
  double lower_at(int n) const { return lower_envelope_log.at(static_cast<std::size_t>(n - n_begin)); }
  double bk_at(int n) const { return bk_lower_log.at(static_cast<std::size_t>(n - n_begin)); }
  double ray_at(int n) const { return ray_value.at(static_cast<std::size_t>(n - n_begin)); }
  int n_end() const { return n_begin + static_cast<int>(upper_envelope_log.size()) - 1; }
};

BoundsReport envelopes(double tau1, int n_max, int quad_nodes = 64);

/// Smallest N at which the ray-optics value exceeds the upper envelope
/// (it always does eventually: 1/N decay versus exponential decay).
std::optional<int> first_ray_violation(const BoundsReport& report);

/// Ratio series r_N = (⟨τ_N⟩/⟨τ₂⟩)^{1/(N−2)} and the A − B/N extrapolants
/// solved exactly from each consecutive pair. A and B are keyed by the upper
/// pair element: a[N] and b[N] come from (r_{N−1}, r_N).
struct RatioExtrapolation {
  std::map<int, double> r;
  std::map<int, double> a;
  std::map<int, double> b;
};

/// series maps N → log ⟨τ_N⟩ for consecutive N starting at some N₀ ≥ 3;
/// throws std::invalid_argument on gaps.
RatioExtrapolation ratio_and_extrapolate(double tau2_mean,
                                         const std::map<int, double>& series);

}  // namespace slabstack
