// Monte Carlo engine for Dyson's Brownian motion and the type-A Dunkl process.
#pragma once

#include "dunkl/density.hpp"
#include "dunkl/freeze.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

struct SimConfig {
  int n = 2;
  double k = 1.0;  ///< Dunkl multiplicity; Dyson coupling beta = 2k
  double dt = 1e-3;
  double t_end = 1.0;
  int n_traj = 1000;
  std::uint64_t seed = 1;
  int guard_depth = 40;             ///< max recursive step halvings
  double jump_cap = 0.1;            ///< bound on (largest pair jump rate) * dt
  double max_drift_fraction = 0.5;  ///< drift move must stay below this fraction of the smallest gap
  int n_records = 1;                ///< evenly spaced records after t = 0
  bool symmetric_start = false;     ///< Dunkl: uniformly permute x0 per trajectory
  int threads = 0;                  ///< 0: DUNKL_THREADS or hardware concurrency

  double beta() const { return 2.0 * k; }

  void validate() const {
    if (n < 1) throw DomainError("SimConfig: n must be positive");
    if (!(k > 0) || !std::isfinite(k)) throw DomainError("SimConfig: k (beta/2) must be positive");
    if (!(dt > 0) || !(t_end > 0)) throw DomainError("SimConfig: dt and t_end must be positive");
    if (n_traj < 1) throw DomainError("SimConfig: n_traj must be at least 1");
    if (guard_depth < 0 || guard_depth > 60) throw DomainError("SimConfig: guard_depth out of range");
    if (!(jump_cap > 0 && jump_cap <= 1)) throw DomainError("SimConfig: jump_cap must be in (0, 1]");
    if (!(max_drift_fraction > 0)) throw DomainError("SimConfig: max_drift_fraction must be positive");
    if (n_records < 1) throw DomainError("SimConfig: n_records must be at least 1");
  }
};

struct JumpEvent {
  int i = 0;
  int j = 0;
  double time = 0.0;
};

/// Labeled trajectories on a common record grid. positions is laid out
/// [trajectory][record][particle].
struct Ensemble {
  int n = 0;
  int n_traj = 0;
  std::vector<double> times;
  std::vector<double> positions;
  std::vector<std::vector<JumpEvent>> jumps;
  std::vector<std::uint64_t> stream_seeds;
  std::vector<std::uint64_t> halvings;  ///< guard halvings per trajectory

  std::size_t n_records() const { return times.size(); }

  std::span<const double> state(int traj, std::size_t record) const {
    const std::size_t off = (static_cast<std::size_t>(traj) * times.size() + record) * static_cast<std::size_t>(n);
    return {positions.data() + off, static_cast<std::size_t>(n)};
  }
  std::span<double> state(int traj, std::size_t record) {
    const std::size_t off = (static_cast<std::size_t>(traj) * times.size() + record) * static_cast<std::size_t>(n);
    return {positions.data() + off, static_cast<std::size_t>(n)};
  }
  std::vector<double> sorted_state(int traj, std::size_t record) const { return sorted_copy(state(traj, record)); }
};

namespace detail {

enum class Process { Dyson, Dunkl };

struct Stepper {
  const SimConfig& cfg;
  Process process;
  Engine& rng;
  std::normal_distribution<double> normal{0.0, 1.0};
  std::uniform_real_distribution<double> uniform{0.0, 1.0};
  std::vector<int> order;
  std::vector<double> drift, proposal;
  std::uint64_t halvings = 0;
  int traj = 0;

  Stepper(const SimConfig& c, Process p, Engine& r, int trajectory)
      : cfg(c), process(p), rng(r), order(static_cast<std::size_t>(c.n)), drift(static_cast<std::size_t>(c.n)),
        proposal(static_cast<std::size_t>(c.n)), traj(trajectory) {}

  // Indices sorted by position; the collision guard requires this order to survive a step.
  void update_order(const std::vector<double>& x) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)]; });
  }

  double min_gap(const std::vector<double>& x) const {
    double g = INFINITY;
    for (std::size_t r = 1; r < order.size(); ++r)
      g = std::min(g, x[static_cast<std::size_t>(order[r])] - x[static_cast<std::size_t>(order[r - 1])]);
    return g;
  }

  // k * sum_{j != i} 1/(x_i - x_j): the (beta/2)-weighted repulsion.
  void compute_drift(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::fill(drift.begin(), drift.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double f = cfg.k / (x[i] - x[j]);
        drift[i] += f;
        drift[j] -= f;
      }
  }

  void diffuse(std::vector<double>& x, double h, std::vector<double> dw, int depth) {
    update_order(x);
    compute_drift(x);
    bool ok = true;
    if (x.size() > 1) {
      const double gap = min_gap(x);
      double max_drift = 0.0;
      for (double d : drift) max_drift = std::max(max_drift, std::abs(d));
      if (max_drift * h > cfg.max_drift_fraction * gap) ok = false;
      if (ok) {
        for (std::size_t i = 0; i < x.size(); ++i) proposal[i] = x[i] + drift[i] * h + dw[i];
        for (std::size_t r = 1; r < order.size() && ok; ++r)
          if (!(proposal[static_cast<std::size_t>(order[r - 1])] < proposal[static_cast<std::size_t>(order[r])])) ok = false;
      }
    } else {
      proposal[0] = x[0] + dw[0];
    }
    for (double v : proposal)
      if (!std::isfinite(v)) ok = false;
    if (ok) {
      x = proposal;
      return;
    }
    if (depth >= cfg.guard_depth)
      throw NumericError("collision guard exhausted (depth " + std::to_string(cfg.guard_depth) + ") in trajectory " +
                         std::to_string(traj));
    ++halvings;
    // Brownian bridge: split the increment over h into two halves consistent with it.
    std::vector<double> first(dw.size()), second(dw.size());
    const double s = std::sqrt(h / 4.0);
    for (std::size_t i = 0; i < dw.size(); ++i) {
      first[i] = 0.5 * dw[i] + s * normal(rng);
      second[i] = dw[i] - first[i];
    }
    diffuse(x, h / 2.0, std::move(first), depth + 1);
    diffuse(x, h / 2.0, std::move(second), depth + 1);
  }

  double max_jump_rate(const std::vector<double>& x) const {
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        const double d = x[i] - x[j];
        r = std::max(r, cfg.k / (d * d));
      }
    return r;
  }

  void advance(std::vector<double>& x, double& t, double target, std::vector<JumpEvent>& jumps) {
    std::vector<double> dw(x.size());
    while (t < target) {
      double h = std::min(cfg.dt, target - t);
      if (process == Process::Dunkl && x.size() > 1) {
        const double rate = max_jump_rate(x);
        if (rate * h > cfg.jump_cap) h = cfg.jump_cap / rate;
        if (!(h > 1e-300)) throw NumericError("jump thinning step underflow in trajectory " + std::to_string(traj));
      }
      if (target - t - h < 1e-12 * std::max(1.0, target)) h = target - t;
      const double sh = std::sqrt(h);
      for (double& w : dw) w = sh * normal(rng);
      diffuse(x, h, dw, 0);
      t = (h == target - t) ? target : t + h;
      if (process == Process::Dunkl) {
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double d = x[i] - x[j];
            const double p = std::min(1.0, cfg.k * h / (d * d));
            if (uniform(rng) < p) {
              std::swap(x[i], x[j]);
              jumps.push_back({static_cast<int>(i), static_cast<int>(j), t});
            }
          }
      }
    }
  }
};

inline Ensemble simulate(const SimConfig& cfg, std::span<const double> x0, Process process) {
  cfg.validate();
  if (static_cast<int>(x0.size()) != cfg.n) throw DomainError("simulate: x0 must have n components");
  if (!strictly_increasing(x0)) throw DomainError("simulate: x0 must be strictly increasing");
  Ensemble e;
  e.n = cfg.n;
  e.n_traj = cfg.n_traj;
  for (int r = 0; r <= cfg.n_records; ++r) e.times.push_back(cfg.t_end * r / cfg.n_records);
  e.positions.assign(static_cast<std::size_t>(cfg.n_traj) * e.times.size() * static_cast<std::size_t>(cfg.n), 0.0);
  e.jumps.resize(static_cast<std::size_t>(cfg.n_traj));
  e.stream_seeds.resize(static_cast<std::size_t>(cfg.n_traj));
  e.halvings.resize(static_cast<std::size_t>(cfg.n_traj));

  parallel_for(static_cast<std::size_t>(cfg.n_traj), resolve_threads(cfg.threads), [&](std::size_t idx) {
    const int traj = static_cast<int>(idx);
    e.stream_seeds[idx] = stream_seed(cfg.seed, idx);
    Engine rng(e.stream_seeds[idx]);
    std::vector<double> x(x0.begin(), x0.end());
    if (process == Process::Dunkl && cfg.symmetric_start) std::shuffle(x.begin(), x.end(), rng);
    Stepper stepper(cfg, process, rng, traj);
    auto rec0 = e.state(traj, 0);
    std::copy(x.begin(), x.end(), rec0.begin());
    double t = 0.0;
    for (std::size_t r = 1; r < e.times.size(); ++r) {
      stepper.advance(x, t, e.times[r], e.jumps[idx]);
      auto rec = e.state(traj, r);
      std::copy(x.begin(), x.end(), rec.begin());
    }
    e.halvings[idx] = stepper.halvings;
  });
  return e;
}

}  // namespace detail

/// Euler-Maruyama for dX_i = dB_i + (beta/2) sum_{j != i} dt / (X_i - X_j).
inline Ensemble simulate_dyson(const SimConfig& cfg, std::span<const double> x0) {
  return detail::simulate(cfg, x0, detail::Process::Dyson);
}

/// Dyson drift and diffusion with beta = 2k plus exchange jumps x -> sigma_ij x
/// at rate k / (x_i - x_j)^2 per unordered pair, by per-step thinning.
inline Ensemble simulate_dunkl(const SimConfig& cfg, std::span<const double> x0) {
  return detail::simulate(cfg, x0, detail::Process::Dunkl);
}

struct FreezeReport {
  int n = 0;
  double k = 0.0;
  double t = 0.0;
  int n_traj = 0;
  std::vector<double> prediction;      ///< sqrt(2t) z_N
  std::vector<double> mean_config;     ///< mean of centered rescaled sorted finals
  std::vector<double> mean_abs_deviation;  ///< per particle, centered
  double mean_max_deviation = 0.0;     ///< mean over trajectories of max_i |v_i - pred_i|, centered
  double rms_deviation = 0.0;          ///< centered
  double mean_max_deviation_uncentered = 0.0;
  double rms_deviation_uncentered = 0.0;
  double mean_center = 0.0;            ///< mean of the rescaled center of mass
};

/// Runs Dyson's model at beta = 2k to cfg.t_end, rescales the sorted final
/// positions by 1/sqrt(k) and measures them against sqrt(2t) z_N.
inline FreezeReport freeze_experiment(const SimConfig& cfg, std::span<const double> x0) {
  if (cfg.k < 100) throw DomainError("freeze_experiment: requires k >= 100");
  SimConfig c = cfg;
  c.n_records = 1;
  const Ensemble e = simulate_dyson(c, x0);
  FreezeReport r;
  r.n = cfg.n;
  r.k = cfg.k;
  r.t = cfg.t_end;
  r.n_traj = cfg.n_traj;
  r.prediction = freeze_prediction(cfg.n, cfg.t_end);
  r.mean_config.assign(static_cast<std::size_t>(cfg.n), 0.0);
  r.mean_abs_deviation.assign(static_cast<std::size_t>(cfg.n), 0.0);
  const double scale = 1.0 / std::sqrt(cfg.k);
  double sq = 0.0, sq_u = 0.0;
  for (int traj = 0; traj < e.n_traj; ++traj) {
    auto v = e.sorted_state(traj, 1);
    double center = 0.0;
    for (double& x : v) {
      x *= scale;
      center += x;
    }
    center /= cfg.n;
    r.mean_center += center;
    double worst = 0.0, worst_u = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double dev = v[i] - center - r.prediction[i];
      const double dev_u = v[i] - r.prediction[i];
      r.mean_config[i] += v[i] - center;
      r.mean_abs_deviation[i] += std::abs(dev);
      worst = std::max(worst, std::abs(dev));
      worst_u = std::max(worst_u, std::abs(dev_u));
      sq += dev * dev;
      sq_u += dev_u * dev_u;
    }
    r.mean_max_deviation += worst;
    r.mean_max_deviation_uncentered += worst_u;
  }
  const double m = e.n_traj;
  for (auto& v : r.mean_config) v /= m;
  for (auto& v : r.mean_abs_deviation) v /= m;
  r.mean_max_deviation /= m;
  r.mean_max_deviation_uncentered /= m;
  r.mean_center /= m;
  r.rms_deviation = std::sqrt(sq / (m * cfg.n));
  r.rms_deviation_uncentered = std::sqrt(sq_u / (m * cfg.n));
  return r;
}

struct FreezeIndependence {
  FreezeReport a, b;
  double centered_gap = 0.0;    ///< max_i |mean_config_a - mean_config_b|
  double uncentered_gap = 0.0;  ///< same before removing the centers
  double deviation_scale = 0.0; ///< max of the two centered RMS deviations
};

/// Compares the frozen configurations reached from two initial conditions.
inline FreezeIndependence freeze_independence(const SimConfig& cfg, std::span<const double> x0a,
                                              std::span<const double> x0b) {
  FreezeIndependence r{freeze_experiment(cfg, x0a), freeze_experiment(cfg, x0b)};
  for (std::size_t i = 0; i < r.a.mean_config.size(); ++i) {
    r.centered_gap = std::max(r.centered_gap, std::abs(r.a.mean_config[i] - r.b.mean_config[i]));
    r.uncentered_gap = std::max(r.uncentered_gap, std::abs((r.a.mean_config[i] + r.a.mean_center) -
                                                           (r.b.mean_config[i] + r.b.mean_center)));
  }
  r.deviation_scale = std::max(r.a.rms_deviation, r.b.rms_deviation);
  return r;
}

struct NormCheckReport {
  int n = 0;
  double k = 0.0;
  std::size_t samples = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  double closed_form = 0.0;
  double relative_error = 0.0;
  double z_score = 0.0;  ///< |estimate - closed_form| / standard_error (0 when both vanish)
};

/// Monte Carlo estimate of c_k = (2 pi)^{N/2} E[|h_N(G)|^{2k}] / 2^{kN(N-1)/2},
/// G standard Gaussian in R^N.
inline NormCheckReport mc_norm_check(int n, double k, std::size_t n_samples, std::uint64_t seed) {
  if (n < 1 || n > 4) throw DomainError("mc_norm_check: N must be in [1, 4]");
  if (!(k > 0) || k > 2) throw DomainError("mc_norm_check: k must be in (0, 2]");
  if (n_samples < 2) throw DomainError("mc_norm_check: need at least 2 samples");
  Engine rng = make_engine(seed, 0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double pref = std::exp(0.5 * n * std::log(2.0 * std::numbers::pi) - 0.5 * k * n * (n - 1) * std::log(2.0));
  std::vector<double> g(static_cast<std::size_t>(n));
  double mean = 0.0, m2 = 0.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    for (double& v : g) v = normal(rng);
    double f = pref;
    if (n > 1) f *= std::exp(2.0 * k * log_abs_vandermonde(g));
    const double delta = f - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (f - mean);
  }
  NormCheckReport r;
  r.n = n;
  r.k = k;
  r.samples = n_samples;
  r.estimate = mean;
  r.standard_error = std::sqrt(m2 / static_cast<double>(n_samples - 1) / static_cast<double>(n_samples));
  r.closed_form = std::exp(log_selberg_constant(n, k));
  r.relative_error = std::abs(r.estimate - r.closed_form) / r.closed_form;
  r.z_score = r.standard_error > 0 ? std::abs(r.estimate - r.closed_form) / r.standard_error : 0.0;
  return r;
}

}  // namespace dunkl
