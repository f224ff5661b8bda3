#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include "slabstack/core.hpp"

namespace slabstack {

/// Streaming mean/variance (Welford), mergeable with the parallel update of
/// Chan et al.
struct Welford {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const Welford& other);
  double variance() const;   // sample variance, 0 for n < 2
  double std_error() const;  // standard error of the mean
};

/// Mean of exponentially large samples, kept entirely in log space:
/// each chunk holds a running max plus a scaled sum, so cosh values up to
/// e^{2e6} accumulate without overflow. Samples are routed to one of 64
/// chunks by trial index, which makes the merge sharding-independent and
/// feeds the leave-one-chunk-out jackknife standard error.
class LogMeanAccumulator {
 public:
  static constexpr int kChunks = 64;

  void add(double log_value, std::uint64_t trial_index);
  void merge(const LogMeanAccumulator& other);

  std::uint64_t count() const;
  /// log( (1/n) Σ e^{l_i} ); −inf when empty.
  double log_mean() const;
  /// Jackknife-over-chunks standard error relative to the mean.
  double rel_std_error() const;

 private:
  struct Cell {
    double peak = -std::numeric_limits<double>::infinity();
    double sum = 0.0;  // Σ e^{l_i − peak}
    std::uint64_t n = 0;

    void add(double l);
    void merge(const Cell& other);
  };
  std::array<Cell, kChunks> cells_{};

  double log_sum_excluding(int skip) const;  // skip < 0 means none
};

/// Per-(τ₁, N) ensemble accumulators for τ, log τ, 1/τ, cosh 2θ_tot and
/// cosh² 2θ_tot, all mergeable; merging is associative and commutative to
/// rounding, with counts exactly additive.
struct EnsembleStats {
  double tau1 = 0.0;
  int n_slabs = 0;
  std::uint64_t count = 0;

  Welford tau;
  Welford log_tau;
  LogMeanAccumulator inv_tau;
  LogMeanAccumulator cosh_eta;
  LogMeanAccumulator cosh_sq_eta;

  EnsembleStats() = default;
  EnsembleStats(double tau1_, int n_slabs_) : tau1(tau1_), n_slabs(n_slabs_) {}

  void add_realization(EtaValue eta, std::uint64_t trial_index);

  double log_mean_tau() const;  // log of the sample mean of τ
  /// log(sample mean τ) ≥ sample mean of log τ, up to rounding slack.
  bool jensen_holds() const;
  /// The ⟨1/τ⟩ estimator is flagged unreliable once its jackknife error
  /// exceeds 30% of the mean.
  bool inv_tau_reliable() const;
};

/// Statistics of the concatenated sample. Throws std::invalid_argument on
/// mismatched (τ₁, N) tags; an empty accumulator is the identity element.
EnsembleStats merge(const EnsembleStats& a, const EnsembleStats& b);

}  // namespace slabstack
