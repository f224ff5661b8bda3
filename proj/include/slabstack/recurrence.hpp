#pragma once

#include <vector>

#include "slabstack/grid.hpp"

namespace slabstack {

struct PropagateDiagnostics {
  /// |probe(M) − probe(2M)| at η = 2θ, in stored-space units.
  double node_delta = 0.0;
  /// Node-doubled quadrature value at η = 2θ (stored space).
  double probe_value = 0.0;
};

/// Samples f₁ on [0, (N+1)·2θ]: the level-N domain plus one composition step
/// of margin. Representation is log-of-positive when the target is positive.
/// Throws CapacityError when the grid would exceed config.max_points.
GridFunction build_initial_grid(const TargetFunction& target, int n_slabs,
                                const SlabParams& params, const RecurrenceConfig& config);

/// One phase-averaging step: f_{n+1}(η′) = (1/M) Σ_k f_n(compose(η′, 2θ, ψ_k))
/// over M equispaced periodic nodes ψ_k = 2πk/M, folded over the cos symmetry.
/// The output domain shrinks by 2θ. Grid points are independent and computed
/// in parallel; each point's quadrature is summed in a fixed order, so the
/// result is bitwise independent of the thread count.
GridFunction propagate(const GridFunction& f_n, const SlabParams& params,
                       const RecurrenceConfig& config, PropagateDiagnostics* diag = nullptr);

/// Serial textbook implementation of the same contract (full node circle, no
/// folding, public compose_eta per node). Kept as the reference the optimized
/// kernel is tested and benchmarked against.
GridFunction propagate_reference(const GridFunction& f_n, const SlabParams& params,
                                 const RecurrenceConfig& config);

struct AverageResult {
  double value = 0.0;  // log of the average for positive targets, plain average otherwise
  bool log_scale = false;
  double error_estimate = 0.0;
};

/// ⟨f(cosh 2θ_tot)⟩ for an N-slab stack: builds f₁, propagates N−1 times and
/// interpolates f_N at η = 2θ. N = 1 evaluates the target at C directly.
/// The error estimate combines the grid-halving delta with the accumulated
/// node-doubling deltas.
AverageResult average_over_stack(double tau1, int n_slabs, const TargetFunction& target,
                                 const RecurrenceConfig& config);

/// Whole series ⟨f⟩_N for N = 2..n_max from one propagation chain (level n of
/// the chain evaluated at η = 2θ is the n-slab average).
struct StackSeries {
  double tau1 = 1.0;
  bool log_scale = false;
  int n_begin = 2;
  std::vector<double> values;
  std::vector<double> errors;

  double value_at(int n) const { return values.at(static_cast<std::size_t>(n - n_begin)); }
  double error_at(int n) const { return errors.at(static_cast<std::size_t>(n - n_begin)); }
  int n_end() const { return n_begin + static_cast<int>(values.size()) - 1; }
};

StackSeries average_series(double tau1, int n_max, const TargetFunction& target,
                           const RecurrenceConfig& config);

}  // namespace slabstack
