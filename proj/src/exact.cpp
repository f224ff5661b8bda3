#include "slabstack/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slabstack {

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

ExactStats exact_statistics(double tau1, int n) {
  if (n < 1) throw std::domain_error("exact_statistics: n must be >= 1");
  const SlabParams p = slab_params(tau1);
  const double nn = static_cast<double>(n);

  ExactStats s;
  s.tau1 = tau1;
  s.n = n;

  s.mean_log_tau = nn * std::log(tau1);
  s.log_bk_lower = s.mean_log_tau;
  s.bk_lower = std::exp(s.log_bk_lower);
  s.ray = tau1 / (tau1 + nn * (1.0 - tau1));

  const double log_c = std::log(p.C);
  s.log_mean_cosh = nn * log_c;
  s.mean_cosh = std::exp(s.log_mean_cosh);

  // ⟨1/τ⟩ = (1 + C^N)/2
  s.log_mean_inv_tau = s.log_mean_cosh + std::log1p(std::exp(-s.log_mean_cosh)) - kLn2;
  s.mean_inv_tau = std::exp(s.log_mean_inv_tau);

  // ⟨cosh²⟩ = 1/3 + (2/3) K^N with K = (3C² − 1)/2 ≥ 1
  const double log_k = std::log(0.5 * (3.0 * p.C * p.C - 1.0));
  const double x = nn * log_k;
  s.log_mean_cosh_sq = x + std::log(2.0 / 3.0) + std::log1p(0.5 * std::exp(-x));
  s.mean_cosh_sq = std::exp(s.log_mean_cosh_sq);

  s.normalized_cosh_variance = std::expm1(s.log_mean_cosh_sq - 2.0 * s.log_mean_cosh);

  if (n == 2) s.mean_tau2 = tau1 / (2.0 - tau1);
  if (n == 3) s.mean_tau3 = tau1 / std::sqrt(4.0 / tau1 - 3.0);
  return s;
}

double f_small_n(int n, double c_prime, const SlabParams& params) {
  if (!(c_prime >= 1.0)) throw std::domain_error("f_small_n: c_prime must be >= 1");
  const double c = params.C;
  switch (n) {
    case 1:
      return 2.0 / (c_prime + 1.0);
    case 2:
      return 2.0 / (c_prime + c);
    case 3:
      return 2.0 / std::sqrt((c_prime + 1.0) * (2.0 * c * c + c_prime - 1.0));
    default:
      throw std::invalid_argument("f_small_n: n must be 1, 2 or 3");
  }
}

}  // namespace slabstack
