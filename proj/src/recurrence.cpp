#include "slabstack/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "slabstack/errors.hpp"

namespace slabstack {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Folded quadrature nodes: ψ_k = 2πk/M for k = 0..M/2 with trapezoid
// multiplicities {1, 2, ..., 2, 1}; cos ψ pairs k and M−k. The endpoint nodes
// are the exact addition (ψ=0) and subtraction (ψ=π) identities.
struct NodeTable {
  int m = 0;
  std::vector<double> w, u, lw, lu;  // cos²(ψ/2), sin²(ψ/2) and their logs
  std::vector<double> mult;

  static NodeTable build(int m) {
    NodeTable t;
    t.m = m;
    const int half = m / 2;
    t.w.resize(half + 1);
    t.u.resize(half + 1);
    t.lw.resize(half + 1);
    t.lu.resize(half + 1);
    t.mult.resize(half + 1);
    for (int k = 0; k <= half; ++k) {
      const double psi = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
      const double ch = std::cos(0.5 * psi);
      const double sh = std::sin(0.5 * psi);
      t.w[k] = ch * ch;
      t.u[k] = sh * sh;
      t.lw[k] = std::log(t.w[k]);
      t.lu[k] = std::log(t.u[k]);
      t.mult[k] = (k == 0 || k == half) ? 1.0 : 2.0;
    }
    return t;
  }
};

// Quadrature of the interpolated f_n around one output point, in stored space.
double quadrature_point(double eta_prime, double eta_slab, const NodeTable& nodes,
                        const GridInterpolant& f, Representation rep,
                        std::vector<double>& scratch) {
  const auto parts = detail::prepare_compose(eta_prime, eta_slab);
  const int last = nodes.m / 2;
  scratch.resize(static_cast<std::size_t>(last) + 1);
  for (int k = 0; k <= last; ++k) {
    double eta2;
    if (k == 0) {
      eta2 = parts.s;
    } else if (k == last) {
      eta2 = parts.d;
    } else {
      eta2 = detail::compose_weighted(parts, nodes.w[k], nodes.u[k], nodes.lw[k], nodes.lu[k]);
    }
    scratch[static_cast<std::size_t>(k)] = f(eta2);
  }
  const double inv_m = 1.0 / static_cast<double>(nodes.m);
  if (rep == Representation::LogOfPositive) {
    double peak = scratch[0];
    for (int k = 1; k <= last; ++k) peak = std::max(peak, scratch[static_cast<std::size_t>(k)]);
    double acc = 0.0;
    for (int k = 0; k <= last; ++k) {
      acc += nodes.mult[k] * std::exp(scratch[static_cast<std::size_t>(k)] - peak);
    }
    return peak + std::log(acc * inv_m);
  }
  double acc = 0.0;
  for (int k = 0; k <= last; ++k) acc += nodes.mult[k] * scratch[static_cast<std::size_t>(k)];
  return acc * inv_m;
}

std::size_t shrunk_size(const GridFunction& f, double eta_slab) {
  const double new_max = f.eta_max() - eta_slab;
  if (new_max < -1e-12) {
    throw std::domain_error("propagate: grid domain too small for another composition step");
  }
  const double steps = std::max(new_max, 0.0) / f.delta_eta;
  return static_cast<std::size_t>(std::floor(steps + 1e-9)) + 1;
}

GridFunction shrunk_like(const GridFunction& f, std::size_t n_out) {
  GridFunction out;
  out.delta_eta = f.delta_eta;
  out.level = f.level + 1;
  out.rep = f.rep;
  out.monotonicity = f.monotonicity;
  out.values.assign(n_out, 0.0);
  return out;
}

}  // namespace

GridFunction build_initial_grid(const TargetFunction& target, int n_slabs,
                                const SlabParams& params, const RecurrenceConfig& config) {
  if (n_slabs < 2) throw std::invalid_argument("build_initial_grid: n_slabs must be >= 2");
  config.validate();

  const double eta_slab = params.eta();
  const double span = static_cast<double>(n_slabs + 1) * eta_slab;
  const auto count =
      static_cast<std::int64_t>(std::ceil(span / config.delta_eta - 1e-9)) + 1;
  if (count > config.max_points) {
    std::ostringstream os;
    os << "build_initial_grid: " << count << " grid points exceed the bound "
       << config.max_points;
    throw CapacityError(os.str());
  }

  GridFunction g;
  g.delta_eta = config.delta_eta;
  g.level = 1;
  g.rep = target.positive ? Representation::LogOfPositive : Representation::Linear;
  g.monotonicity = target.monotonicity;
  g.values.resize(static_cast<std::size_t>(std::max<std::int64_t>(count, 2)));
  for (std::size_t j = 0; j < g.values.size(); ++j) {
    g.values[j] = target.stored_from_eta(static_cast<double>(j) * config.delta_eta);
  }
  validate_grid(g, "build_initial_grid");
  return g;
}

GridFunction propagate(const GridFunction& f_n, const SlabParams& params,
                       const RecurrenceConfig& config, PropagateDiagnostics* diag) {
  config.validate();
  if (f_n.values.size() < 2) throw std::invalid_argument("propagate: input grid too small");

  const double eta_slab = params.eta();
  const NodeTable nodes = NodeTable::build(config.quad_nodes);
  const GridInterpolant interp(f_n, config.interpolation);
  GridFunction out = shrunk_like(f_n, shrunk_size(f_n, eta_slab));
  const auto n_out = static_cast<std::int64_t>(out.values.size());

#pragma omp parallel
  {
    std::vector<double> scratch;
#pragma omp for schedule(static)
    for (std::int64_t j = 0; j < n_out; ++j) {
      const double eta_prime = static_cast<double>(j) * out.delta_eta;
      out.values[static_cast<std::size_t>(j)] =
          quadrature_point(eta_prime, eta_slab, nodes, interp, out.rep, scratch);
    }
  }

  double node_delta = 0.0;
  double probe = 0.0;
  if (config.convergence_check || diag != nullptr) {
    std::vector<double> scratch;
    const double v1 = quadrature_point(eta_slab, eta_slab, nodes, interp, out.rep, scratch);
    const NodeTable fine = NodeTable::build(2 * config.quad_nodes);
    probe = quadrature_point(eta_slab, eta_slab, fine, interp, out.rep, scratch);
    node_delta = std::fabs(v1 - probe);
    const double denom = (out.rep == Representation::LogOfPositive)
                             ? 1.0
                             : std::max(std::fabs(probe), 1e-12);
    if (config.convergence_check && node_delta > config.tolerance * denom) {
      std::ostringstream os;
      os << "propagate: doubling quad_nodes from " << config.quad_nodes << " moved f_"
         << out.level << "(C) by " << node_delta << " (> tolerance " << config.tolerance
         << "); increase quad_nodes";
      throw ConvergenceError(os.str());
    }
  }
  if (diag != nullptr) {
    diag->node_delta = node_delta;
    diag->probe_value = probe;
  }

  validate_grid(out, "propagate");
  return out;
}

GridFunction propagate_reference(const GridFunction& f_n, const SlabParams& params,
                                 const RecurrenceConfig& config) {
  config.validate();
  if (f_n.values.size() < 2) throw std::invalid_argument("propagate: input grid too small");

  const double eta_slab = params.eta();
  const int m = config.quad_nodes;
  const GridInterpolant interp(f_n, config.interpolation);
  GridFunction out = shrunk_like(f_n, shrunk_size(f_n, eta_slab));

  std::vector<double> g(static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < out.values.size(); ++j) {
    const double eta_prime = static_cast<double>(j) * out.delta_eta;
    for (int k = 0; k < m; ++k) {
      const double psi = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
      const double eta2 =
          compose_eta(EtaValue(eta_prime), EtaValue(eta_slab), psi).value();
      g[static_cast<std::size_t>(k)] = interp(eta2);
    }
    if (out.rep == Representation::LogOfPositive) {
      const double peak = *std::max_element(g.begin(), g.end());
      double acc = 0.0;
      for (double v : g) acc += std::exp(v - peak);
      out.values[j] = peak + std::log(acc / m);
    } else {
      double acc = 0.0;
      for (double v : g) acc += v;
      out.values[j] = acc / m;
    }
  }
  validate_grid(out, "propagate_reference");
  return out;
}

namespace {

struct ChainResult {
  std::vector<double> values;          // index n−2
  std::vector<double> node_delta_cum;  // accumulated node-doubling deltas up to level n
};

ChainResult run_chain(const SlabParams& params, int n_max, const TargetFunction& target,
                      const RecurrenceConfig& config) {
  ChainResult r;
  r.values.reserve(static_cast<std::size_t>(n_max - 1));
  r.node_delta_cum.reserve(static_cast<std::size_t>(n_max - 1));
  GridFunction f = build_initial_grid(target, n_max, params, config);
  double cum = 0.0;
  for (int n = 2; n <= n_max; ++n) {
    PropagateDiagnostics diag;
    f = propagate(f, params, config, &diag);
    cum += diag.node_delta;
    const GridInterpolant interp(f, config.interpolation);
    r.values.push_back(interp(params.eta()));
    r.node_delta_cum.push_back(cum);
  }
  return r;
}

}  // namespace

StackSeries average_series(double tau1, int n_max, const TargetFunction& target,
                           const RecurrenceConfig& config) {
  if (n_max < 2) throw std::invalid_argument("average_series: n_max must be >= 2");
  config.validate();
  const SlabParams params = slab_params(tau1);

  StackSeries s;
  s.tau1 = tau1;
  s.log_scale = target.positive;
  s.n_begin = 2;

  if (params.S == 0.0) {  // transparent slabs: every level equals the target at C = 1
    const double v = target.stored_from_eta(0.0);
    s.values.assign(static_cast<std::size_t>(n_max - 1), v);
    s.errors.assign(static_cast<std::size_t>(n_max - 1), 0.0);
    return s;
  }

  const ChainResult fine = run_chain(params, n_max, target, config);
  RecurrenceConfig coarse_cfg = config;
  coarse_cfg.delta_eta = 2.0 * config.delta_eta;
  const ChainResult coarse = run_chain(params, n_max, target, coarse_cfg);

  s.values = fine.values;
  s.errors.resize(fine.values.size());
  for (std::size_t i = 0; i < fine.values.size(); ++i) {
    const double grid_delta = std::fabs(fine.values[i] - coarse.values[i]);
    s.errors[i] = 0.25 * grid_delta + fine.node_delta_cum[i] +
                  4e-13 * (1.0 + std::fabs(fine.values[i]));
  }
  return s;
}

AverageResult average_over_stack(double tau1, int n_slabs, const TargetFunction& target,
                                 const RecurrenceConfig& config) {
  if (n_slabs < 1) throw std::invalid_argument("average_over_stack: n_slabs must be >= 1");
  config.validate();
  AverageResult r;
  r.log_scale = target.positive;
  if (n_slabs == 1) {
    const SlabParams params = slab_params(tau1);
    r.value = target.stored_from_eta(params.eta());
    r.error_estimate = 0.0;
    return r;
  }
  const StackSeries s = average_series(tau1, n_slabs, target, config);
  r.value = s.value_at(n_slabs);
  r.error_estimate = s.error_at(n_slabs);
  return r;
}

}  // namespace slabstack
