#pragma once

#include <optional>

#include "slabstack/core.hpp"

namespace slabstack {

/// Every closed-form ensemble statistic of an N-slab stack.
/// Quantities that grow like C^N carry a log-domain companion that stays
/// finite when the linear value overflows to +inf.
struct ExactStats {
  double tau1 = 1.0;
  int n = 1;

  double mean_log_tau = 0.0;  // ⟨log τ_N⟩ = N log τ₁ (self-averaging)
  double bk_lower = 1.0;      // τ₁^N, the Jensen lower bound on ⟨τ_N⟩
  double log_bk_lower = 0.0;
  double ray = 1.0;  // interference-free τ₁/(τ₁ + N(1−τ₁)); correct only for N ≤ 2

  double mean_inv_tau = 1.0;  // ⟨1/τ_N⟩ = 1/2 + C^N/2
  double log_mean_inv_tau = 0.0;
  double mean_cosh = 1.0;  // ⟨cosh 2θ_tot⟩ = C^N
  double log_mean_cosh = 0.0;
  double mean_cosh_sq = 1.0;  // ⟨cosh²⟩ = 1/3 + (2/3)[(3C²−1)/2]^N
  double log_mean_cosh_sq = 0.0;
  double normalized_cosh_variance = 0.0;  // ⟨cosh²⟩/⟨cosh⟩² − 1

  std::optional<double> mean_tau2;  // τ₁/(2−τ₁), N = 2 only
  std::optional<double> mean_tau3;  // τ₁/√(4/τ₁−3), N = 3 only
};

/// Evaluates all closed forms; N >= 1, tau1 in (0, 1].
ExactStats exact_statistics(double tau1, int n);

/// The first intermediate averages of the τ recurrence, exposed as oracles:
///   f₁(C′) = 2/(C′+1),  f₂(C′) = 2/(C′+C),  f₃(C′) = 2/√((C′+1)(2C²+C′−1)).
/// n must be 1, 2 or 3 and c_prime >= 1.
double f_small_n(int n, double c_prime, const SlabParams& params);

}  // namespace slabstack
