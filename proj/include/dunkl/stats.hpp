// Ensemble statistics: sorted marginals, Kolmogorov-Smirnov distances, moments.
#pragma once

#include "dunkl/rational.hpp"
#include "dunkl/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace dunkl {

/// out[c][traj]: c-th smallest particle of each trajectory at `record`, sorted ascending.
inline std::vector<std::vector<double>> sorted_marginals(const Ensemble& e, std::size_t record) {
  if (e.n_traj < 1) throw DomainError("sorted_marginals: empty ensemble");
  if (record >= e.n_records()) throw DomainError("sorted_marginals: record index out of range");
  std::vector<std::vector<double>> out(static_cast<std::size_t>(e.n), std::vector<double>(static_cast<std::size_t>(e.n_traj)));
  for (int traj = 0; traj < e.n_traj; ++traj) {
    const auto s = e.sorted_state(traj, record);
    for (int c = 0; c < e.n; ++c) out[static_cast<std::size_t>(c)][static_cast<std::size_t>(traj)] = s[static_cast<std::size_t>(c)];
  }
  for (auto& col : out) std::sort(col.begin(), col.end());
  return out;
}

/// Fraction of the sample (sorted ascending) that is <= x.
inline double empirical_cdf(std::span<const double> sorted_sample, double x) {
  if (sorted_sample.empty()) throw DomainError("empirical_cdf: empty sample");
  const auto it = std::upper_bound(sorted_sample.begin(), sorted_sample.end(), x);
  return static_cast<double>(it - sorted_sample.begin()) / static_cast<double>(sorted_sample.size());
}

inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

inline double ks_one_sample(std::vector<double> a, const std::function<double(double)>& cdf) {
  if (a.empty()) throw DomainError("ks_one_sample: empty sample");
  std::sort(a.begin(), a.end());
  const double n = static_cast<double>(a.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double f = cdf(a[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// Asymptotic two-sample KS critical value; c = 1.628 at the 1% level.
inline double ks_critical_value(std::size_t n, std::size_t m, double c = 1.628) {
  const double a = static_cast<double>(n), b = static_cast<double>(m);
  return c * std::sqrt((a + b) / (a * b));
}

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double standard_error = 0.0;  ///< of the mean
};

inline Moments moments(std::span<const double> v) {
  if (v.size() < 2) throw DomainError("moments: need at least 2 values");
  const double n = static_cast<double>(v.size());
  Moments m;
  for (double x : v) m.mean += x;
  m.mean /= n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : v) {
    const double d = x - m.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  m.variance = m2 * n / (n - 1);
  m.skewness = m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0;
  m.excess_kurtosis = m2 > 0 ? m4 / (m2 * m2) - 3.0 : 0.0;
  m.standard_error = std::sqrt(m.variance / n);
  return m;
}

struct EnsembleStats {
  std::size_t record = 0;
  double time = 0.0;
  std::vector<Moments> sorted;  ///< per sorted coordinate
  Moments center_shift;         ///< sum_i X_i(t) - sum_i X_i(0)
  double mean_jumps = 0.0;      ///< mean jump count per trajectory over the whole run
};

inline EnsembleStats ensemble_stats(const Ensemble& e, std::size_t record) {
  EnsembleStats s;
  s.record = record;
  const auto marg = sorted_marginals(e, record);
  s.time = e.times[record];
  for (const auto& col : marg) s.sorted.push_back(moments(col));
  std::vector<double> shift(static_cast<std::size_t>(e.n_traj));
  for (int traj = 0; traj < e.n_traj; ++traj) {
    double a = 0.0, b = 0.0;
    for (double v : e.state(traj, record)) a += v;
    for (double v : e.state(traj, 0)) b += v;
    shift[static_cast<std::size_t>(traj)] = a - b;
  }
  s.center_shift = moments(shift);
  for (const auto& log : e.jumps) s.mean_jumps += static_cast<double>(log.size());
  s.mean_jumps /= e.n_traj;
  return s;
}

/// Two-sample KS per sorted coordinate between two ensembles on the same grid.
inline std::vector<double> compare_ensembles(const Ensemble& a, const Ensemble& b, std::size_t record) {
  if (a.n != b.n) throw DomainError("compare_ensembles: particle counts differ");
  if (a.times != b.times) throw DomainError("compare_ensembles: time grids differ");
  const auto ma = sorted_marginals(a, record), mb = sorted_marginals(b, record);
  std::vector<double> out;
  for (std::size_t c = 0; c < ma.size(); ++c) out.push_back(ks_two_sample(ma[c], mb[c]));
  return out;
}

/// Replays a trajectory's jump log on its labels and checks that every swap
/// leaves the sorted configuration unchanged; returns the number of swaps checked.
inline std::size_t check_jump_invariance(const Ensemble& e, int traj, std::span<const double> configuration) {
  std::vector<double> x(configuration.begin(), configuration.end());
  const auto before = sorted_copy(x);
  std::size_t count = 0;
  for (const auto& ev : e.jumps[static_cast<std::size_t>(traj)]) {
    std::swap(x[static_cast<std::size_t>(ev.i)], x[static_cast<std::size_t>(ev.j)]);
    if (sorted_copy(x) != before) throw NumericError("jump changed the sorted configuration");
    ++count;
  }
  return count;
}

}  // namespace dunkl
