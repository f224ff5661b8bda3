#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "slabstack/stats.hpp"
#include "slabstack/transfer.hpp"

namespace slabstack {

/// Reproducibility key: identical (seed, stream_id) reproduce identical phase
/// sequences on any platform and with any worker count.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// Counter-based uniform angle stream: the state is a pure function of
/// (seed, stream_id, substream, trial), so trial i can be regenerated — or
/// handed to any worker — without touching any other trial.
class PhaseStream {
 public:
  PhaseStream(const RngSpec& spec, std::uint64_t substream, std::uint64_t trial);

  std::uint64_t next_u64();
  double next_angle();  // uniform in [0, 2π)

 private:
  std::uint64_t state_;
};

/// One random stack: draws N−1 uniform gap angles and folds the composition
/// law starting from η = 2θ.
EtaValue sample_realization(const SlabParams& params, int n_slabs, PhaseStream& stream);

/// Ensemble simulation of `trials` stacks for each N in n_values.
///
/// Trials are split over 256 fixed logical shards merged in shard order, so
/// results are bitwise identical for any thread count. When matrix_check is
/// set, every 1000th trial with N ≤ 50 is re-simulated through the full
/// transfer-matrix product with identical phases; a τ mismatch beyond 1e−10
/// relative throws CrossCheckError with the offending seed and phases.
std::map<int, EnsembleStats> run_mc(double tau1, const std::vector<int>& n_values,
                                    std::uint64_t trials, const RngSpec& rng,
                                    bool matrix_check = true);

}  // namespace slabstack
