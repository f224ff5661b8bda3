#include "slabstack/montecarlo.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "slabstack/errors.hpp"

namespace slabstack {

namespace {

constexpr int kShards = 256;
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kMatrixCheckStride = 1000;
constexpr int kMatrixCheckMaxN = 50;

// splitmix64 finalizer (Steele, Lea, Flood)
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

PhaseStream::PhaseStream(const RngSpec& spec, std::uint64_t substream, std::uint64_t trial) {
  std::uint64_t s = mix64(spec.seed + kGamma);
  s = mix64(s ^ spec.stream_id);
  s = mix64(s ^ substream);
  s = mix64(s ^ trial);
  state_ = s;
}

std::uint64_t PhaseStream::next_u64() {
  state_ += kGamma;
  return mix64(state_);
}

double PhaseStream::next_angle() {
  const double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return unit * (2.0 * std::numbers::pi);
}

EtaValue sample_realization(const SlabParams& params, int n_slabs, PhaseStream& stream) {
  if (n_slabs < 1) throw std::invalid_argument("sample_realization: n_slabs must be >= 1");
  const double eta_slab = params.eta();
  double eta = eta_slab;
  for (int i = 1; i < n_slabs; ++i) {
    eta = detail::compose_eta_raw(eta, eta_slab, stream.next_angle());
  }
  return EtaValue(eta);
}

namespace {

void matrix_check_trial(const SlabParams& params, int n, const RngSpec& rng,
                        std::uint64_t trial, double tau_scalar) {
  PhaseStream replay(rng, static_cast<std::uint64_t>(n), trial);
  std::vector<double> angles(static_cast<std::size_t>(n - 1));
  for (double& a : angles) a = replay.next_angle();
  const MatrixStackResult mat = simulate_matrix_stack(params, PhaseSequence(angles));
  const double rel = std::fabs(mat.tau - tau_scalar) / tau_scalar;
  if (rel > 1e-10) {
    std::ostringstream os;
    os.precision(17);
    os << "run_mc: matrix cross-check mismatch at seed=" << rng.seed
       << " stream=" << rng.stream_id << " N=" << n << " trial=" << trial
       << ": scalar tau=" << tau_scalar << " matrix tau=" << mat.tau << " (rel " << rel
       << "); phases:";
    for (double a : angles) os << ' ' << a;
    throw CrossCheckError(os.str());
  }
}

}  // namespace

std::map<int, EnsembleStats> run_mc(double tau1, const std::vector<int>& n_values,
                                    std::uint64_t trials, const RngSpec& rng,
                                    bool matrix_check) {
  if (n_values.empty()) throw std::invalid_argument("run_mc: n_values must be non-empty");
  if (trials < 1) throw std::invalid_argument("run_mc: trials must be >= 1");
  const SlabParams params = slab_params(tau1);

  std::map<int, EnsembleStats> out;
  for (int n : n_values) {
    if (n < 1) throw std::invalid_argument("run_mc: every N must be >= 1");
    const auto substream = static_cast<std::uint64_t>(n);
    const bool check = matrix_check && n <= kMatrixCheckMaxN;

    // fixed shard boundaries: bitwise identical results for any worker count
    std::vector<EnsembleStats> parts(kShards, EnsembleStats(tau1, n));
    const std::uint64_t base = trials / kShards;
    const std::uint64_t rem = trials % kShards;
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < kShards; ++s) {
      const auto us = static_cast<std::uint64_t>(s);
      const std::uint64_t lo = us * base + std::min<std::uint64_t>(us, rem);
      const std::uint64_t hi = lo + base + (us < rem ? 1 : 0);
      try {
        for (std::uint64_t trial = lo; trial < hi; ++trial) {
          PhaseStream stream(rng, substream, trial);
          const EtaValue eta = sample_realization(params, n, stream);
          parts[static_cast<std::size_t>(s)].add_realization(eta, trial);
          if (check && trial % kMatrixCheckStride == 0) {
            matrix_check_trial(params, n, rng, trial, tau_from_eta(eta).tau);
          }
        }
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    EnsembleStats total(tau1, n);
    for (const EnsembleStats& p : parts) total = merge(total, p);
    out.emplace(n, total);
  }
  return out;
}

}  // namespace slabstack
