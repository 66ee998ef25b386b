// Named verification suites. Each suite returns a list of checks with the
// measured value, the tolerance it is held to and the verdict; the CLI's
// `verify` command and the acceptance driver both run these.
#pragma once

#include "dunkl/density.hpp"
#include "dunkl/freeze.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/oracle/grabiner_marginal.hpp"
#include "dunkl/oracle/polynomial.hpp"
#include "dunkl/simulation.hpp"
#include "dunkl/stats.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dunkl {

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string relation = "<=";
};

struct SuiteReport {
  std::string suite;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

struct SuiteOptions {
  std::optional<int> n;
  std::optional<double> k;
  std::optional<int> traj;
  std::optional<std::uint64_t> seed;
  int threads = 0;
};

namespace detail {

inline Check at_most(std::string name, double measured, double tol) {
  return {std::move(name), measured, tol, measured <= tol, "<="};
}
inline Check less_than(std::string name, double measured, double bound) {
  return {std::move(name), measured, bound, measured < bound, "<"};
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void finish(SuiteReport& r, const Timer& timer, double budget) {
  r.seconds = timer.seconds();
  r.checks.push_back(at_most("runtime_s", r.seconds, budget));
}

// (k+1)/(kN+1) m_2 + 2k/(kN+1) m_11 and k(N-1)/(2(kN+1)) m_2 + (k(N-1)+1)/(kN+1) m_11.
inline SuiteReport suite_quadratic() {
  Timer timer;
  SuiteReport r{"quadratic", "quadratic intertwining, exact"};
  const Partition two{2}, pair{1, 1};
  long mismatches = 0, cases = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Rational k : {Rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
      const Rational kn1 = k * n + 1;
      const auto a = intertwine_monomial(two, k, n).output;
      const auto b = intertwine_monomial(pair, k, n).output;
      mismatches += a.coefficient(two) != (k + 1) / kn1;
      mismatches += a.coefficient(pair) != 2 * k / kn1;
      mismatches += b.coefficient(two) != k * (n - 1) / (2 * kn1);
      mismatches += b.coefficient(pair) != (k * (n - 1) + 1) / kn1;
      mismatches += a.terms().size() != 2 || b.terms().size() != 2;
      cases += 5;
    }
  r.checks.push_back(at_most("mismatched_coefficients_of_" + std::to_string(cases), static_cast<double>(mismatches), 0));
  finish(r, timer, 1.0);
  return r;
}

inline SuiteReport suite_limit() {
  Timer timer;
  SuiteReport r{"limit", "large-k limit of the intertwining operator"};
  double worst = 0.0;
  long not_shrinking = 0;
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (const auto& lambda : enumerate_partitions(d, n)) {
        const SymPoly lim = intertwine_limit(lambda, n).monomial_form();
        const SymPoly a = intertwine_monomial(lambda, Rational(10000), n).output;
        const SymPoly b = intertwine_monomial(lambda, Rational(20000), n).output;
        for (const auto& mu : enumerate_partitions(d, n)) {
          const Rational target = lim.coefficient(mu);
          const Rational ga = abs(a.coefficient(mu) - target), gb = abs(b.coefficient(mu) - target);
          worst = std::max(worst, to_double(ga));
          // coefficients already equal to their limit stay there
          if (!(gb < ga || (ga == 0 && gb == 0))) ++not_shrinking;
        }
      }
  r.checks.push_back(at_most("max_abs_gap_k1e4", worst, 1e-3));
  r.checks.push_back(at_most("coefficients_not_closer_at_k2e4", static_cast<double>(not_shrinking), 0));
  finish(r, timer, 10.0);
  return r;
}

inline std::vector<double> random_ordered_point(std::mt19937_64& rng, int n, double radius) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  std::vector<double> v(static_cast<std::size_t>(n));
  double norm = 0.0;
  for (double& x : v) {
    x = normal(rng);
    norm += x * x;
  }
  const double rad = radius * std::pow(uniform(rng), 1.0 / n) / std::sqrt(norm);
  for (double& x : v) x *= rad;
  std::sort(v.begin(), v.end());
  return v;
}

inline SuiteReport suite_beta2(std::uint64_t seed) {
  Timer timer;
  SuiteReport r{"beta2", "series density against the determinantal density at beta = 2"};
  std::mt19937_64 rng(seed);
  const double ts[] = {0.5, 1.0, 2.0};
  double worst = 0.0;
  int unconverged = 0;
  for (int i = 0; i < 50; ++i) {
    TpdQuery q;
    const int n = 2 + i % 2;
    q.t = ts[i % 3];
    q.x = random_ordered_point(rng, n, 2.0);
    q.y = random_ordered_point(rng, n, 2.0);
    q.beta = 2.0;
    q.controls.max_degree = 60;
    const auto s = dyson_tpd_series(q);
    unconverged += !s.series.converged;
    const double g = grabiner_tpd(q);
    worst = std::max(worst, std::abs(s.value - g) / std::abs(g));
  }
  r.checks.push_back(at_most("max_relative_error_50_points", worst, 1e-8));
  r.checks.push_back(at_most("unconverged_series", unconverged, 0));
  finish(r, timer, 30.0);
  return r;
}

inline SuiteReport suite_thm1(const SuiteOptions& o) {
  Timer timer;
  SuiteReport r{"thm1", "symmetric Dunkl process against Dyson's model"};
  SimConfig cfg;
  cfg.n = o.n.value_or(3);
  cfg.k = o.k.value_or(1.0);
  cfg.n_traj = o.traj.value_or(10000);
  cfg.seed = o.seed.value_or(7);
  cfg.dt = 1e-3;
  cfg.t_end = 1.0;
  cfg.threads = o.threads;
  std::vector<double> x0(static_cast<std::size_t>(cfg.n));
  for (int i = 0; i < cfg.n; ++i) x0[static_cast<std::size_t>(i)] = i - 0.5 * (cfg.n - 1);
  const Ensemble dyson = simulate_dyson(cfg, x0);
  SimConfig dcfg = cfg;
  dcfg.symmetric_start = true;
  dcfg.seed = cfg.seed ^ 0xD1B54A32D192ED03ULL;
  const Ensemble dunkl = simulate_dunkl(dcfg, x0);
  const auto ks = compare_ensembles(dunkl, dyson, 1);
  for (std::size_t c = 0; c < ks.size(); ++c)
    r.checks.push_back(at_most("ks_dunkl_vs_dyson_coord" + std::to_string(c), ks[c], 0.05));
  if (cfg.k == 1.0) {
    const oracle::GrabinerMarginals exact(x0, cfg.t_end);
    const auto marg = sorted_marginals(dyson, 1);
    for (int c = 0; c < cfg.n; ++c) {
      const double d = ks_one_sample(marg[static_cast<std::size_t>(c)], [&](double s) { return exact.order_statistic_cdf(c, s); });
      r.checks.push_back(at_most("ks_dyson_vs_exact_coord" + std::to_string(c), d, 0.05));
    }
  }
  finish(r, timer, 300.0);
  return r;
}

inline SuiteReport suite_hermite(const SuiteOptions& o) {
  Timer timer;
  SuiteReport r{"hermite", "Hermite-root identities and the freeze function"};
  const int n_max = o.n.value_or(20);
  if (n_max < 1 || n_max > 50) throw DomainError("verify hermite: n must be in [1, 50]");
  double sum = 0, sum_sq = 0, disc = 0, f_val = 0, grad = 0, hess_max = -INFINITY;
  std::mt19937_64 rng(o.seed.value_or(3));
  std::normal_distribution<double> normal;
  for (int n = 1; n <= n_max; ++n) {
    const auto id = root_identities(n);
    sum = std::max(sum, std::abs(id.sum));
    sum_sq = std::max(sum_sq, std::abs(id.sum_sq - id.sum_sq_reference) / (static_cast<double>(n) * n));
    disc = std::max(disc, std::abs(id.log_discriminant - id.log_discriminant_reference));
    for (double t : {0.5, 1.0, 3.0}) {
      const auto v = freeze_prediction(n, t);
      f_val = std::max(f_val, std::abs(freeze_eval(v, t)));
      double g2 = 0;
      for (double g : freeze_grad(v, t)) g2 += g * g;
      grad = std::max(grad, std::sqrt(g2));
      const Eigen::MatrixXd h = freeze_hess(v, t);
      for (int d = 0; d < 100; ++d) {
        Eigen::VectorXd u(n);
        for (int i = 0; i < n; ++i) u(i) = normal(rng);
        u.normalize();
        hess_max = std::max(hess_max, u.dot(h * u));
      }
    }
  }
  r.checks.push_back(at_most("max_abs_sum_z", sum, 1e-12));
  r.checks.push_back(at_most("max_sum_z2_error_over_N2", sum_sq, 1e-10));
  r.checks.push_back(at_most("max_log_discriminant_error", disc, 1e-9));
  r.checks.push_back(at_most("max_abs_F_at_frozen_point", f_val, 1e-9));
  r.checks.push_back(at_most("max_grad_norm_at_frozen_point", grad, 1e-9));
  r.checks.push_back(less_than("max_hessian_quadratic_form", hess_max, 0.0));
  finish(r, timer, 5.0);
  return r;
}

inline SuiteReport suite_freeze(const SuiteOptions& o) {
  Timer timer;
  SuiteReport r{"freeze", "freezing regime against sqrt(2t) Hermite roots"};
  std::vector<int> ns;
  if (o.n) ns = {*o.n};
  else ns = {3, 4};
  const double k = o.k.value_or(1e4);
  for (int n : ns) {
    SimConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.dt = 1e-4;
    cfg.t_end = 1.0;
    cfg.n_traj = o.traj.value_or(100);
    cfg.seed = o.seed.value_or(1);
    cfg.threads = o.threads;
    std::vector<double> x0(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x0[static_cast<std::size_t>(i)] = i - 0.5 * (n - 1);
    const auto base = freeze_experiment(cfg, x0);
    SimConfig big = cfg;
    big.k = 4.0 * k;
    const auto strong = freeze_experiment(big, x0);
    const std::string tag = "_N" + std::to_string(n);
    r.checks.push_back(at_most("mean_max_centered_deviation" + tag, base.mean_max_deviation, 0.05));
    r.checks.push_back(less_than("rms_deviation_k4x_vs_k" + tag, strong.rms_deviation, base.rms_deviation));
  }
  finish(r, timer, 600.0);
  return r;
}

inline SuiteReport suite_jack() {
  Timer timer;
  SuiteReport r{"jack", "Jack eigenrelation and Schur rows"};
  long nonzero_residuals = 0, rows = 0, schur_mismatch = 0, schur_rows = 0;
  for (const Rational alpha : {Rational(1, 2), Rational(1), Rational(2)})
    for (int n = 1; n <= 4; ++n)
      for (int d = 1; d <= 5; ++d)
        for (const auto& tau : enumerate_partitions(d, n)) {
          const auto& row = jack_expansion(tau, alpha, n);
          oracle::Polynomial p(n);
          for (const auto& [mu, c] : row.u) p += oracle::monomial_symmetric(mu, n) * c;
          oracle::Polynomial res = oracle::jack_operator(p, alpha);
          res -= p * row.eigenvalue;
          nonzero_residuals += !res.is_zero();
          ++rows;
          if (alpha == 1 && d <= 4) {
            ++schur_rows;
            schur_mismatch += oracle::monomial_coefficients(oracle::schur_bialternant(tau, n)) != row.u;
          }
        }
  r.checks.push_back(at_most("nonzero_eigen_residuals_of_" + std::to_string(rows), static_cast<double>(nonzero_residuals), 0));
  r.checks.push_back(at_most("schur_row_mismatches_of_" + std::to_string(schur_rows), static_cast<double>(schur_mismatch), 0));
  finish(r, timer, 30.0);
  return r;
}

inline SuiteReport suite_selberg(const SuiteOptions& o) {
  Timer timer;
  SuiteReport r{"selberg", "Monte Carlo Selberg normalization"};
  const std::size_t samples = o.traj ? static_cast<std::size_t>(*o.traj) : 1000000;
  const std::uint64_t seed = o.seed.value_or(11);
  const std::pair<int, double> cases[] = {{2, 1.0}, {3, 0.5}};
  for (const auto& [n, k] : cases) {
    const auto rep = mc_norm_check(n, k, samples, seed);
    r.checks.push_back(at_most("z_score_N" + std::to_string(n) + "_k" + std::to_string(k).substr(0, 3), rep.z_score, 3.0));
  }
  finish(r, timer, 60.0);
  return r;
}

/// Integral of the N = 2 density over y1 < y2 in center/gap coordinates with
/// composite Gauss-Legendre rules.
inline double normalization_integral(double beta, double t, std::span<const double> x) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const double s = std::sqrt(t);
  const double c_mid = 0.5 * (x[0] + x[1]);
  const double c_lo = c_mid - 8.0 * s, c_hi = c_mid + 8.0 * s;
  const double g_hi = (x[1] - x[0]) + 12.0 * s;
  const int panels = 4;
  auto composite = [&](const std::function<double(double)>& f, double lo, double hi) {
    double acc = 0.0;
    const double w = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) acc += Rule::integrate(f, lo + p * w, lo + (p + 1) * w);
    return acc;
  };
  TpdQuery q;
  q.t = t;
  q.beta = beta;
  q.x.assign(x.begin(), x.end());
  q.controls.max_degree = 60;
  return composite(
      [&](double c) {
        return composite(
            [&](double g) {
              if (g <= 0) return 0.0;
              q.y = {c - 0.5 * g, c + 0.5 * g};
              return dyson_tpd_series(q).value;
            },
            0.0, g_hi);
      },
      c_lo, c_hi);
}

inline SuiteReport suite_normalization() {
  Timer timer;
  SuiteReport r{"normalization", "total mass of the series density"};
  const std::vector<double> x{-0.5, 0.5};
  for (double beta : {1.0, 2.0, 4.0}) {
    const double mass = normalization_integral(beta, 1.0, x);
    r.checks.push_back(at_most("abs_mass_error_beta" + std::to_string(static_cast<int>(beta)), std::abs(mass - 1.0), 1e-4));
  }
  finish(r, timer, 60.0);
  return r;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  return {"quadratic", "limit", "beta2", "thm1", "hermite", "freeze", "jack", "selberg", "normalization"};
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& o = {}) {
  if (name == "quadratic") return detail::suite_quadratic();
  if (name == "limit") return detail::suite_limit();
  if (name == "beta2") return detail::suite_beta2(o.seed.value_or(2024));
  if (name == "thm1") return detail::suite_thm1(o);
  if (name == "hermite") return detail::suite_hermite(o);
  if (name == "freeze") return detail::suite_freeze(o);
  if (name == "jack") return detail::suite_jack();
  if (name == "selberg") return detail::suite_selberg(o);
  if (name == "normalization") return detail::suite_normalization();
  throw DomainError("unknown verification suite '" + name + "'");
}

}  // namespace dunkl
