// The large-deviation function of the freezing regime and the deterministic
// limit dynamics dv_i/dt = sum_{j != i} 1/(v_i - v_j).
#pragma once

#include "dunkl/hermite.hpp"
#include "dunkl/rational.hpp"

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

namespace detail {
inline void check_distinct(std::span<const double> v, const char* who) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) throw DomainError(std::string(who) + ": coincident components");
}
inline void check_time(double t, const char* who) {
  if (!(t > 0) || !std::isfinite(t)) throw DomainError(std::string(who) + ": t must be positive");
}
}  // namespace detail

/// F_N(v,t) = (N/2)(N-1)(1 - log t) - sum_j j log j + 2 log|h_N(v)| - v^2/2t.
/// Returns -infinity when two components coincide.
inline double freeze_eval(std::span<const double> v, double t) {
  detail::check_time(t, "freeze_eval");
  const int n = static_cast<int>(v.size());
  double f = 0.5 * n * (n - 1) * (1.0 - std::log(t));
  for (int j = 2; j <= n; ++j) f -= j * std::log(static_cast<double>(j));
  for (std::size_t i = 0; i < v.size(); ++i) {
    f -= v[i] * v[i] / (2.0 * t);
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double d = std::abs(v[j] - v[i]);
      if (d == 0.0) return -std::numeric_limits<double>::infinity();
      f += 2.0 * std::log(d);
    }
  }
  return f;
}

inline std::vector<double> freeze_grad(std::span<const double> v, double t) {
  detail::check_time(t, "freeze_grad");
  detail::check_distinct(v, "freeze_grad");
  std::vector<double> g(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i) s += 2.0 / (v[i] - v[j]);
    g[i] = s - v[i] / t;
  }
  return g;
}

inline Eigen::MatrixXd freeze_hess(std::span<const double> v, double t) {
  detail::check_time(t, "freeze_hess");
  detail::check_distinct(v, "freeze_hess");
  const auto n = static_cast<Eigen::Index>(v.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double diag = -1.0 / t;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
      const double c = 2.0 / (d * d);
      h(i, j) = c;
      diag -= c;
    }
    h(i, i) = diag;
  }
  return h;
}

/// Frozen configuration sqrt(2t) z_N.
inline std::vector<double> freeze_prediction(int n, double t) {
  if (t < 0) throw DomainError("freeze_prediction: t must be non-negative");
  std::vector<double> out = hermite_roots(n).roots;
  const double s = std::sqrt(2.0 * t);
  for (double& v : out) v *= s;
  return out;
}

struct OdeControls {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 1e-6;
  /// Extra output times strictly inside (t0, t1); the end point is always recorded.
  std::vector<double> output_times;
};

struct OdeTrajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::size_t accepted_steps = 0;
};

/// Integrates dv_i/dt = sum_{j != i} 1/(v_i - v_j) from an ordered v0 on [t0, t1]
/// with an adaptive Dormand-Prince 5(4) pair. The field sums to zero, so
/// sum_i v_i is conserved up to integrator tolerance.
inline OdeTrajectory freeze_ode(std::vector<double> v0, double t0, double t1, const OdeControls& controls = {}) {
  if (!(t0 > 0)) throw DomainError("freeze_ode: t0 must be positive");
  if (!(t1 > t0)) throw DomainError("freeze_ode: t1 must exceed t0");
  for (std::size_t i = 1; i < v0.size(); ++i)
    if (!(v0[i - 1] < v0[i])) throw DomainError("freeze_ode: v0 must be strictly increasing");

  using State = std::vector<double>;
  namespace ode = boost::numeric::odeint;
  auto field = [](const State& v, State& dv, double) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (v[i] - v[j]);
      dv[i] = s;
    }
  };

  OdeTrajectory traj;
  traj.times.push_back(t0);
  traj.states.push_back(v0);
  auto stepper = ode::make_dense_output(controls.abs_tol, controls.rel_tol, ode::runge_kutta_dopri5<State>());
  stepper.initialize(v0, t0, controls.initial_step);

  std::vector<double> outputs;
  for (double t : controls.output_times)
    if (t > t0 && t < t1) outputs.push_back(t);
  std::sort(outputs.begin(), outputs.end());
  outputs.push_back(t1);
  std::size_t next = 0;
  State tmp(v0.size());
  std::size_t guard = 0;
  while (next < outputs.size()) {
    if (stepper.current_time() < outputs[next]) {
      stepper.do_step(field);
      ++traj.accepted_steps;
      if (++guard > 50'000'000) throw NumericError("freeze_ode: step budget exhausted");
      const State& cur = stepper.current_state();
      for (std::size_t i = 1; i < cur.size(); ++i)
        if (!(cur[i - 1] < cur[i]))
          throw NumericError("freeze_ode: ordering lost at t=" + std::to_string(stepper.current_time()));
      if (stepper.current_time_step() < 1e-14 * std::max(1.0, stepper.current_time()))
        throw NumericError("freeze_ode: step size underflow");
    }
    while (next < outputs.size() && outputs[next] <= stepper.current_time()) {
      stepper.calc_state(outputs[next], tmp);
      traj.times.push_back(outputs[next]);
      traj.states.push_back(tmp);
      ++next;
    }
  }
  return traj;
}

}  // namespace dunkl
