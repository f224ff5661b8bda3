#pragma once

#include <functional>
#include <string>

#include "slabstack/core.hpp"

namespace slabstack {

enum class TargetKind { Tau, LogTau, IdentityC, SecondMoment, Custom };

enum class Monotonicity { None, NonIncreasing, NonDecreasing };

/// Target function f of the recurrence: the quantity whose phase average
/// ⟨f(cosh 2θ_tot)⟩ is computed. Positive targets are stored and propagated
/// as log f so values like τ-averages (~e^{−N|log τ₁|}) never underflow.
struct TargetFunction {
  TargetKind kind = TargetKind::Tau;
  bool positive = true;
  Monotonicity monotonicity = Monotonicity::None;  // of f as a function of η
  std::string name = "tau";

  /// Custom evaluator on C′ ≥ 1 (Custom kind only).
  std::function<double(double)> custom_value;
  /// Optional stable evaluator giving the stored value (log f for positive
  /// targets) directly from η; required for custom targets once the grid
  /// reaches η where cosh η overflows.
  std::function<double(double)> custom_stored_eta;

  /// f(C′) for C′ ≥ 1.
  double value_from_cosh(double c_prime) const;
  /// Stored-space sample at η: log f(cosh η) for positive targets, f otherwise.
  double stored_from_eta(double eta) const;

  static TargetFunction tau();            // f(C′) = 2/(C′+1)
  static TargetFunction log_tau();        // f(C′) = log(2/(C′+1)), stored linearly
  static TargetFunction identity_c();     // f(C′) = C′
  static TargetFunction second_moment();  // f(C′) = C′² − 1/3
  static TargetFunction inv_tau();        // f(C′) = (C′+1)/2
  static TargetFunction cosh_sq();        // f(C′) = C′²
  static TargetFunction custom(std::string name, std::function<double(double)> value,
                               bool positive,
                               std::function<double(double)> stored_eta = nullptr);
};

}  // namespace slabstack
