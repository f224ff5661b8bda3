#include "slabstack/core.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace slabstack {

namespace {
constexpr double kLn2 = std::numbers::ln2;
// Largest s = eta1 + eta2 for which sinh(s/2)^2 stays inside double range.
constexpr double kLinearEtaMax = 700.0;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

namespace detail {

double log_cosh(double x) {
  return x + std::log1p(std::exp(-2.0 * x)) - kLn2;
}

double log_cosh_m1(double x) {
  if (x <= 0.0) return -kInf;
  if (x < 1.0) {
    const double s = std::sinh(0.5 * x);
    return std::log(2.0 * s * s);
  }
  // cosh x − 1 = e^x (1 − e^{−x})² / 2
  return x + 2.0 * std::log1p(-std::exp(-x)) - kLn2;
}

double acosh1p(double delta) {
  if (delta < 1e15) {
    return std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
  }
  // corrections are O(1/delta), below double resolution here
  return std::log(delta) + kLn2;
}

double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

ComposeParts prepare_compose(double eta1, double eta2) {
  ComposeParts p;
  p.s = eta1 + eta2;
  p.d = std::fabs(eta1 - eta2);
  p.linear = (p.s <= kLinearEtaMax);
  if (p.linear) {
    const double sp = std::sinh(0.5 * p.s);
    const double sm = std::sinh(0.5 * p.d);
    p.a = 2.0 * sp * sp;
    p.b = 2.0 * sm * sm;
  } else {
    p.la = log_cosh_m1(p.s);
    p.lb = log_cosh_m1(p.d);
  }
  return p;
}

double compose_weighted(const ComposeParts& p, double w, double u, double lw, double lu) {
  double out;
  if (p.linear) {
    out = acosh1p(w * p.a + u * p.b);
  } else {
    const double ld = log_add_exp(lw + p.la, lu + p.lb);
    out = (ld < 690.0) ? acosh1p(std::exp(ld)) : ld + kLn2;
  }
  return std::clamp(out, p.d, p.s);
}

double compose_eta_raw(double eta1, double eta2, double psi) {
  const double c = std::cos(psi);
  if (c == 1.0) return eta1 + eta2;
  if (c == -1.0) return std::fabs(eta1 - eta2);
  const double ch = std::cos(0.5 * psi);
  const double sh = std::sin(0.5 * psi);
  const double w = ch * ch;
  const double u = sh * sh;
  const auto p = prepare_compose(eta1, eta2);
  return compose_weighted(p, w, u, std::log(w), std::log(u));
}

double log_tau_from_eta(double eta) {
  return -2.0 * (0.5 * eta + std::log1p(std::exp(-eta)) - kLn2);
}

}  // namespace detail

SlabParams slab_params(double tau1) {
  if (!(tau1 > 0.0) || tau1 > 1.0 || !std::isfinite(tau1)) {
    throw std::domain_error("slab_params: tau1 must lie in (0, 1]");
  }
  SlabParams p;
  p.tau1 = tau1;
  p.C = 2.0 / tau1 - 1.0;
  p.S = (2.0 / tau1) * std::sqrt(1.0 - tau1);
  // asinh is well conditioned near tau1 = 1, where acosh(C) would lose digits
  p.theta = 0.5 * std::asinh(p.S);
  return p;
}

EtaValue::EtaValue(double eta) : eta_(eta) {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw std::domain_error("EtaValue: eta must be finite and >= 0");
  }
}

EtaValue compose_eta(EtaValue eta1, EtaValue eta2, double psi) {
  EtaValue out;
  out = EtaValue(detail::compose_eta_raw(eta1.value(), eta2.value(), psi));
  return out;
}

TauValue tau_from_eta(EtaValue eta) {
  TauValue t;
  t.log_tau = detail::log_tau_from_eta(eta.value());
  if (t.log_tau > 0.0) t.log_tau = 0.0;
  t.tau = std::exp(t.log_tau);
  return t;
}

}  // namespace slabstack
