#include "slabstack/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace slabstack {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void Welford::add(double x) {
  ++n;
  const double delta = x - mean;
  mean += delta / static_cast<double>(n);
  m2 += delta * (x - mean);
}

void Welford::merge(const Welford& other) {
  if (other.n == 0) return;
  if (n == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n);
  const double nb = static_cast<double>(other.n);
  const double delta = other.mean - mean;
  const double total = na + nb;
  mean += delta * nb / total;
  m2 += other.m2 + delta * delta * na * nb / total;
  n += other.n;
}

double Welford::variance() const {
  return (n < 2) ? 0.0 : m2 / static_cast<double>(n - 1);
}

double Welford::std_error() const {
  return (n < 2) ? 0.0 : std::sqrt(variance() / static_cast<double>(n));
}

void LogMeanAccumulator::Cell::add(double l) {
  if (n == 0 || l > peak) {
    sum = (n == 0) ? 0.0 : sum * std::exp(peak - l);
    peak = l;
    sum += 1.0;
  } else {
    sum += std::exp(l - peak);
  }
  ++n;
}

void LogMeanAccumulator::Cell::merge(const Cell& other) {
  if (other.n == 0) return;
  if (n == 0) {
    *this = other;
    return;
  }
  if (other.peak > peak) {
    sum = sum * std::exp(peak - other.peak) + other.sum;
    peak = other.peak;
  } else {
    sum += other.sum * std::exp(other.peak - peak);
  }
  n += other.n;
}

void LogMeanAccumulator::add(double log_value, std::uint64_t trial_index) {
  cells_[trial_index % kChunks].add(log_value);
}

void LogMeanAccumulator::merge(const LogMeanAccumulator& other) {
  for (int i = 0; i < kChunks; ++i) cells_[static_cast<std::size_t>(i)].merge(other.cells_[static_cast<std::size_t>(i)]);
}

std::uint64_t LogMeanAccumulator::count() const {
  std::uint64_t total = 0;
  for (const Cell& c : cells_) total += c.n;
  return total;
}

double LogMeanAccumulator::log_sum_excluding(int skip) const {
  double peak = kNegInf;
  for (int i = 0; i < kChunks; ++i) {
    if (i == skip || cells_[static_cast<std::size_t>(i)].n == 0) continue;
    peak = std::max(peak, cells_[static_cast<std::size_t>(i)].peak);
  }
  if (peak == kNegInf) return kNegInf;
  double acc = 0.0;
  for (int i = 0; i < kChunks; ++i) {
    if (i == skip || cells_[static_cast<std::size_t>(i)].n == 0) continue;
    const Cell& c = cells_[static_cast<std::size_t>(i)];
    acc += c.sum * std::exp(c.peak - peak);
  }
  return peak + std::log(acc);
}

double LogMeanAccumulator::log_mean() const {
  const std::uint64_t total = count();
  if (total == 0) return kNegInf;
  return log_sum_excluding(-1) - std::log(static_cast<double>(total));
}

double LogMeanAccumulator::rel_std_error() const {
  const std::uint64_t total = count();
  if (total < 2) return 0.0;
  int occupied = 0;
  for (const Cell& c : cells_) occupied += (c.n > 0) ? 1 : 0;
  if (occupied < 2) return 0.0;

  const double log_all = log_mean();
  double ratios[kChunks];
  int j = 0;
  for (int i = 0; i < kChunks; ++i) {
    const Cell& c = cells_[static_cast<std::size_t>(i)];
    if (c.n == 0) continue;
    const double rest = static_cast<double>(total - c.n);
    const double log_theta_i = log_sum_excluding(i) - std::log(rest);
    ratios[j++] = std::exp(log_theta_i - log_all);
  }
  double mean_ratio = 0.0;
  for (int i = 0; i < occupied; ++i) mean_ratio += ratios[i];
  mean_ratio /= occupied;
  double ssq = 0.0;
  for (int i = 0; i < occupied; ++i) {
    const double d = ratios[i] - mean_ratio;
    ssq += d * d;
  }
  const double g = static_cast<double>(occupied);
  return std::sqrt((g - 1.0) / g * ssq);
}

void EnsembleStats::add_realization(EtaValue eta, std::uint64_t trial_index) {
  const TauValue t = tau_from_eta(eta);
  const double log_cosh = detail::log_cosh(eta.value());
  tau.add(t.tau);
  log_tau.add(t.log_tau);
  inv_tau.add(-t.log_tau, trial_index);
  cosh_eta.add(log_cosh, trial_index);
  cosh_sq_eta.add(2.0 * log_cosh, trial_index);
  ++count;
}

double EnsembleStats::log_mean_tau() const {
  return std::log(tau.mean);
}

bool EnsembleStats::jensen_holds() const {
  if (count == 0) return true;
  return log_mean_tau() + 1e-12 >= log_tau.mean;
}

bool EnsembleStats::inv_tau_reliable() const {
  return inv_tau.rel_std_error() <= 0.30;
}

EnsembleStats merge(const EnsembleStats& a, const EnsembleStats& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  if (a.tau1 != b.tau1 || a.n_slabs != b.n_slabs) {
    throw std::invalid_argument("merge: EnsembleStats tags (tau1, N) do not match");
  }
  EnsembleStats out = a;
  out.count += b.count;
  out.tau.merge(b.tau);
  out.log_tau.merge(b.log_tau);
  out.inv_tau.merge(b.inv_tau);
  out.cosh_eta.merge(b.cosh_eta);
  out.cosh_sq_eta.merge(b.cosh_sq_eta);
  return out;
}

}  // namespace slabstack
