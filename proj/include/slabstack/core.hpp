#pragma once

#include <cmath>

namespace slabstack {

/// Constants of one slab with transmission probability tau1.
///
/// C = cosh(2θ) = 2/τ₁ − 1 and S = sinh(2θ) = (2/τ₁)√(1−τ₁), so C² − S² = 1
/// and τ₁ = 2/(C+1). θ is the slab rapidity; 2θ is what one slab adds to the
/// stack rapidity when composed in phase.
struct SlabParams {
  double tau1 = 1.0;
  double C = 1.0;
  double S = 0.0;
  double theta = 0.0;

  /// Rapidity contribution of one slab, η₁ = 2θ.
  double eta() const { return 2.0 * theta; }
};

/// Builds SlabParams from tau1 in (0, 1]. Throws std::domain_error otherwise.
SlabParams slab_params(double tau1);

/// Stack rapidity η ≥ 0 with τ = 2/(cosh η + 1).
///
/// Stored as η itself, never as cosh η, so states far beyond the range of
/// double (η up to 1e6 and more) remain exactly representable and all
/// log-domain accessors stay finite.
class EtaValue {
 public:
  EtaValue() = default;
  explicit EtaValue(double eta);  // throws std::domain_error unless eta >= 0 and finite
  double value() const { return eta_; }

 private:
  double eta_ = 0.0;
};

/// Transmission probability of a state, in linear and log form.
/// tau underflows to 0 for very large eta; log_tau is always finite.
struct TauValue {
  double tau = 1.0;
  double log_tau = 0.0;
};

/// Composition law for two stack segments joined by a uniform gap angle psi:
///   cosh η″ = cosh η₁ cosh η₂ + cos ψ sinh η₁ sinh η₂.
///
/// Evaluated as the convex combination
///   cosh η″ = cos²(ψ/2) cosh(η₁+η₂) + sin²(ψ/2) cosh(|η₁−η₂|),
/// switching to log-domain accumulation once η₁+η₂ exceeds the linear range,
/// so η″ keeps ~1e−15 relative accuracy for arbitrarily large inputs.
/// Angles whose cosine rounds exactly to ±1 (within ~1e−8 of 0 or π mod 2π)
/// yield the exact addition/subtraction identities η₁+η₂ and |η₁−η₂|.
/// Symmetric under swap of the two arguments; result lies in [|η₁−η₂|, η₁+η₂].
EtaValue compose_eta(EtaValue eta1, EtaValue eta2, double psi);

/// tau = 2/(cosh η + 1) and its log, computed as
/// log τ = −2(η/2 + log1p(e^{−η}) − log 2), finite for η up to 1e6 and beyond.
TauValue tau_from_eta(EtaValue eta);

namespace detail {

/// log(cosh x) for x >= 0.
double log_cosh(double x);

/// log(cosh x − 1) for x > 0 (−inf at x = 0).
double log_cosh_m1(double x);

/// acosh(1 + delta) for delta >= 0, full relative accuracy near 0 and no
/// overflow for huge delta.
double acosh1p(double delta);

/// log(e^a + e^b); either argument may be −inf.
double log_add_exp(double a, double b);

/// Per-pair precomputation shared by every gap angle composed onto the same
/// (η₁, η₂); lets quadrature loops amortize the hyperbolic evaluations.
struct ComposeParts {
  double s = 0.0;       // η₁ + η₂
  double d = 0.0;       // |η₁ − η₂|
  bool linear = true;   // s small enough for direct sinh evaluation
  double a = 0.0;       // cosh s − 1  (linear path)
  double b = 0.0;       // cosh d − 1  (linear path)
  double la = 0.0;      // log(cosh s − 1)  (log path)
  double lb = 0.0;      // log(cosh d − 1)  (log path; −inf when d = 0)
};

ComposeParts prepare_compose(double eta1, double eta2);

/// Composed rapidity for weights w = cos²(ψ/2), u = sin²(ψ/2) with
/// lw = log w, lu = log u. Requires 0 < w, u < 1 (identity angles are handled
/// by the caller).
double compose_weighted(const ComposeParts& p, double w, double u, double lw, double lu);

/// Raw composition on doubles; same contract as compose_eta.
double compose_eta_raw(double eta1, double eta2, double psi);

/// log τ(η) = −2(η/2 + log1p(e^{−η}) − log 2), valid for any η >= 0.
double log_tau_from_eta(double eta);

}  // namespace detail
}  // namespace slabstack
