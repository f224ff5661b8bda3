#include "slabstack/target.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace slabstack {

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kCoshOverflowEta = 709.0;
}  // namespace

double TargetFunction::value_from_cosh(double c_prime) const {
  if (!(c_prime >= 1.0)) throw std::domain_error("TargetFunction: c_prime must be >= 1");
  switch (kind) {
    case TargetKind::Tau:
      return 2.0 / (c_prime + 1.0);
    case TargetKind::LogTau:
      return std::log(2.0 / (c_prime + 1.0));
    case TargetKind::IdentityC:
      return c_prime;
    case TargetKind::SecondMoment:
      return c_prime * c_prime - 1.0 / 3.0;
    case TargetKind::Custom:
      if (!custom_value) throw std::logic_error("TargetFunction: custom evaluator missing");
      return custom_value(c_prime);
  }
  throw std::logic_error("TargetFunction: unknown kind");
}

double TargetFunction::stored_from_eta(double eta) const {
  using detail::log_cosh;
  using detail::log_tau_from_eta;
  switch (kind) {
    case TargetKind::Tau:
    case TargetKind::LogTau:
      // same number; Tau stores it as log f, LogTau as the value itself
      return log_tau_from_eta(eta);
    case TargetKind::IdentityC:
      return log_cosh(eta);
    case TargetKind::SecondMoment: {
      const double l = log_cosh(eta);
      return 2.0 * l + std::log1p(-std::exp(-2.0 * l) / 3.0);
    }
    case TargetKind::Custom:
      break;
  }
  if (custom_stored_eta) return custom_stored_eta(eta);
  if (eta > kCoshOverflowEta) {
    throw std::domain_error(
        "TargetFunction: custom target needs a log-domain evaluator for eta > 709");
  }
  const double v = value_from_cosh(std::cosh(eta));
  if (positive) {
    if (!(v > 0.0)) throw std::domain_error("TargetFunction: positive target returned <= 0");
    return std::log(v);
  }
  return v;
}

TargetFunction TargetFunction::tau() {
  TargetFunction t;
  t.kind = TargetKind::Tau;
  t.positive = true;
  t.monotonicity = Monotonicity::NonIncreasing;
  t.name = "tau";
  return t;
}

TargetFunction TargetFunction::log_tau() {
  TargetFunction t;
  t.kind = TargetKind::LogTau;
  t.positive = false;
  t.monotonicity = Monotonicity::NonIncreasing;
  t.name = "logtau";
  return t;
}

TargetFunction TargetFunction::identity_c() {
  TargetFunction t;
  t.kind = TargetKind::IdentityC;
  t.positive = true;
  t.monotonicity = Monotonicity::NonDecreasing;
  t.name = "cosh";
  return t;
}

TargetFunction TargetFunction::second_moment() {
  TargetFunction t;
  t.kind = TargetKind::SecondMoment;
  t.positive = true;
  t.monotonicity = Monotonicity::NonDecreasing;
  t.name = "second_moment";
  return t;
}

TargetFunction TargetFunction::inv_tau() {
  TargetFunction t = custom(
      "invtau", [](double c) { return 0.5 * (c + 1.0); }, true,
      [](double eta) {
        const double l = detail::log_cosh(eta);
        return l + std::log1p(std::exp(-l)) - kLn2;
      });
  t.monotonicity = Monotonicity::NonDecreasing;
  return t;
}

TargetFunction TargetFunction::cosh_sq() {
  TargetFunction t = custom(
      "cosh2", [](double c) { return c * c; }, true,
      [](double eta) { return 2.0 * detail::log_cosh(eta); });
  t.monotonicity = Monotonicity::NonDecreasing;
  return t;
}

TargetFunction TargetFunction::custom(std::string name, std::function<double(double)> value,
                                      bool positive,
                                      std::function<double(double)> stored_eta) {
  TargetFunction t;
  t.kind = TargetKind::Custom;
  t.positive = positive;
  t.monotonicity = Monotonicity::None;
  t.name = std::move(name);
  t.custom_value = std::move(value);
  t.custom_stored_eta = std::move(stored_eta);
  return t;
}

}  // namespace slabstack
