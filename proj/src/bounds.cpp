#include "slabstack/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "slabstack/errors.hpp"

namespace slabstack {

namespace {

constexpr int kMaxNodes = 1 << 22;

// (1/2π)∮ dφ (C + S cos φ)^{−1/2} with M equispaced nodes, folded over the
// cos symmetry. C + S cos φ is evaluated as (C−S) + 2S cos²(φ/2) so the near
// cancellation at φ = π (where C − S = e^{−2θ} can be tiny) keeps full
// precision.
double upsilon_trapezoid(double c_minus_s, double s, int m) {
  const int half = m / 2;
  double acc = 0.0;
  for (int k = 0; k <= half; ++k) {
    const double phi_half = std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    const double c = std::cos(phi_half);
    const double integrand = 1.0 / std::sqrt(c_minus_s + 2.0 * s * c * c);
    acc += ((k == 0 || k == half) ? 1.0 : 2.0) * integrand;
  }
  return acc / static_cast<double>(m);
}

}  // namespace

double upsilon(double tau1, int quad_nodes) {
  if (quad_nodes < 16) throw std::invalid_argument("upsilon: quad_nodes must be >= 16");
  const SlabParams p = slab_params(tau1);
  if (p.S == 0.0) return 1.0;
  const double c_minus_s = std::exp(-p.eta());  // C − S = e^{−2θ}

  int m = quad_nodes + (quad_nodes % 2);
  double value = upsilon_trapezoid(c_minus_s, p.S, m);
  double delta = 0.0;
  while (m <= kMaxNodes) {
    const double refined = upsilon_trapezoid(c_minus_s, p.S, 2 * m);
    delta = std::fabs(refined - value);
    value = refined;
    m *= 2;
    if (delta <= 1e-12) return value;
  }
  if (delta > 1e-10) {
    std::ostringstream os;
    os << "upsilon: node doubling still moves the value by " << delta << " at " << m
       << " nodes (tau1 = " << tau1 << ")";
    throw ConvergenceError(os.str());
  }
  return value;
}

double upsilon_agm(double tau1) {
  const SlabParams p = slab_params(tau1);
  double a = std::exp(p.theta);
  double b = std::exp(-p.theta);
  for (int i = 0; i < 64 && a != b; ++i) {
    const double am = 0.5 * (a + b);
    const double gm = std::sqrt(a * b);
    if (am == a && gm == b) break;
    a = am;
    b = gm;
  }
  return 2.0 / (a + b);
}

double lambda_bound(double tau1) {
  const double breakpoint = 2.0 - std::sqrt(2.0);
  slab_params(tau1);  // input validation
  if (tau1 >= breakpoint) return 1.0 / (2.0 - tau1);
  return std::sqrt(tau1 - 0.25 * tau1 * tau1);
}

BoundsReport envelopes(double tau1, int n_max, int quad_nodes) {
  if (n_max < 2) throw std::invalid_argument("envelopes: n_max must be >= 2");
  BoundsReport r;
  r.tau1 = tau1;
  r.upsilon = upsilon(tau1, quad_nodes);
  r.lambda = lambda_bound(tau1);
  r.log_tau2 = std::log(tau1 / (2.0 - tau1));
  r.n_begin = 2;

  const double log_upsilon = std::log(r.upsilon);
  const double log_lambda = std::log(r.lambda);
  const double log_tau1 = std::log(tau1);
  const auto count = static_cast<std::size_t>(n_max - 1);
  r.upper_envelope_log.resize(count);
  r.lower_envelope_log.resize(count);
  r.bk_lower_log.resize(count);
  r.ray_value.resize(count);
  for (int n = 2; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n - 2);
    r.upper_envelope_log[i] = r.log_tau2 + (n - 2) * log_upsilon;
    r.lower_envelope_log[i] = r.log_tau2 + (n - 2) * log_lambda;
    r.bk_lower_log[i] = n * log_tau1;
    r.ray_value[i] = tau1 / (tau1 + n * (1.0 - tau1));
  }
  return r;
}

std::optional<int> first_ray_violation(const BoundsReport& report) {
  for (int n = report.n_begin; n <= report.n_end(); ++n) {
    if (std::log(report.ray_at(n)) > report.upper_at(n)) return n;
  }
  return std::nullopt;
}

RatioExtrapolation ratio_and_extrapolate(double tau2_mean,
                                         const std::map<int, double>& series) {
  if (!(tau2_mean > 0.0)) {
    throw std::invalid_argument("ratio_and_extrapolate: tau2_mean must be positive");
  }
  if (series.empty()) {
    throw std::invalid_argument("ratio_and_extrapolate: series must be non-empty");
  }
  if (series.begin()->first < 3) {
    throw std::invalid_argument("ratio_and_extrapolate: series must start at N >= 3");
  }
  const double log_tau2 = std::log(tau2_mean);

  RatioExtrapolation out;
  int expected = series.begin()->first;
  for (const auto& [n, log_mean] : series) {
    if (n != expected) {
      std::ostringstream os;
      os << "ratio_and_extrapolate: series has a gap at N = " << expected;
      throw std::invalid_argument(os.str());
    }
    ++expected;
    out.r[n] = std::exp((log_mean - log_tau2) / static_cast<double>(n - 2));
  }
  for (auto it = std::next(out.r.begin()); it != out.r.end(); ++it) {
    const auto prev = std::prev(it);
    const double n = static_cast<double>(it->first);
    const double a = n * it->second - (n - 1.0) * prev->second;
    out.a[it->first] = a;
    out.b[it->first] = (n - 1.0) * (a - prev->second);
  }
  return out;
}

}  // namespace slabstack
