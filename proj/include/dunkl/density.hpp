// Transition densities of Dyson's model and of the symmetric type-A Dunkl process.
#pragma once

#include "dunkl/hypergeometric.hpp"
#include "dunkl/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

/// Density query p(t, y | x); x and y strictly increasing.
struct TpdQuery {
  double t = 1.0;
  std::vector<double> x;
  std::vector<double> y;
  double beta = 2.0;
  SeriesControls controls{};

  double k() const { return beta / 2.0; }
};

struct TpdResult {
  double value = 0.0;
  SeriesResult series{};
};

inline std::vector<double> sorted_copy(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// log |prod_{i<j} (v_j - v_i)|; -inf if two components coincide.
inline double log_abs_vandermonde(std::span<const double> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) s += std::log(std::abs(v[j] - v[i]));
  return s;
}

namespace detail {

inline bool strictly_increasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) return false;
  return true;
}

inline void check_query(const TpdQuery& q, bool need_beta = true) {
  if (q.x.empty() || q.x.size() != q.y.size())
    throw DomainError("density: x and y must be non-empty and of equal length");
  if (!(q.t > 0) || !std::isfinite(q.t)) throw DomainError("density: t must be positive");
  if (need_beta && (!(q.beta > 0) || !std::isfinite(q.beta))) throw DomainError("density: beta must be positive");
  for (double v : q.x)
    if (!std::isfinite(v)) throw DomainError("density: non-finite x");
  for (double v : q.y)
    if (!std::isfinite(v)) throw DomainError("density: non-finite y");
  if (!strictly_increasing(q.x) || !strictly_increasing(q.y))
    throw DomainError("density: x and y must be strictly increasing (sort first)");
}

inline std::vector<double> scaled(std::span<const double> v, double s) {
  std::vector<double> out(v.begin(), v.end());
  for (auto& e : out) e *= s;
  return out;
}

inline double sq_norm(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return s;
}

// Determinant by Gaussian elimination with partial pivoting.
inline long double determinant(std::vector<std::vector<long double>> a) {
  const std::size_t n = a.size();
  long double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (a[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const long double f = a[r][c] / a[c][c];
      for (std::size_t cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
    }
  }
  return det;
}

}  // namespace detail

/// log c_k with c_k = (2 pi)^{N/2} 2^{-kN(N-1)/2} prod_j Gamma(1+jk)/Gamma(1+k).
inline double log_selberg_constant(int n_vars, double k) {
  double s = 0.5 * n_vars * std::log(2.0 * std::numbers::pi) - 0.5 * k * n_vars * (n_vars - 1) * std::log(2.0);
  for (int j = 1; j <= n_vars; ++j) s += std::lgamma(1.0 + j * k) - std::lgamma(1.0 + k);
  return s;
}

struct WeightNorm {
  int n_vars = 0;
  Rational k;
  Rational gamma;             ///< k N(N-1)/2, the multiplicity sum over positive roots
  Rational vandermonde_power; ///< w_k(x) = |h_N(x)|^{2k} / 2^{gamma}
  double c_k = 0.0;
  double log_c_k = 0.0;
};

inline WeightNorm weight_norm(int n_vars, const Rational& k) {
  if (n_vars < 1) throw DomainError("weight_norm: N must be positive");
  if (k <= 0) throw DomainError("weight_norm: k must be positive");
  WeightNorm w;
  w.n_vars = n_vars;
  w.k = k;
  w.gamma = k * Rational(n_vars * (n_vars - 1), 2);
  w.vandermonde_power = 2 * k;
  w.log_c_k = log_selberg_constant(n_vars, to_double(k));
  w.c_k = std::exp(w.log_c_k);
  return w;
}

/// w_k(y) = |h_N(y)|^{2k} / 2^{kN(N-1)/2}.
inline double weight_function(std::span<const double> y, double k) {
  const double n = static_cast<double>(y.size());
  return std::exp(2.0 * k * log_abs_vandermonde(y) - 0.5 * k * n * (n - 1) * std::log(2.0));
}

/// Dyson's model density via the Jack-series closed form:
/// N! e^{-(x^2+y^2)/2t} (2 pi t)^{-N/2} prod_j Gamma(1+b/2)/Gamma(1+jb/2)
///   |h_N(y/sqrt t)|^b 0F0^{(2/b)}(x/sqrt t, y/sqrt t).
inline TpdResult dyson_tpd_series(const TpdQuery& q) {
  detail::check_query(q);
  const int n = static_cast<int>(q.x.size());
  const double rt = 1.0 / std::sqrt(q.t);
  const auto xs = detail::scaled(q.x, rt), ys = detail::scaled(q.y, rt);
  double log_pref = std::lgamma(n + 1.0) - (detail::sq_norm(q.x) + detail::sq_norm(q.y)) / (2.0 * q.t) -
                    0.5 * n * std::log(2.0 * std::numbers::pi * q.t) + q.beta * log_abs_vandermonde(ys);
  for (int j = 1; j <= n; ++j) log_pref += std::lgamma(1.0 + q.beta / 2.0) - std::lgamma(1.0 + j * q.beta / 2.0);
  TpdResult r;
  r.series = hypergeom_00(xs, ys, q.k(), q.controls);
  r.value = std::exp(log_pref) * r.series.value;
  return r;
}

/// Non-colliding Brownian motion (beta = 2):
/// h_N(y)/h_N(x) det[exp(-(x_i - y_j)^2 / 2t) / sqrt(2 pi t)].
inline double grabiner_tpd(const TpdQuery& q) {
  detail::check_query(q, false);
  if (q.beta != 2.0) throw DomainError("grabiner_tpd: only defined for beta = 2");
  const std::size_t n = q.x.size();
  const long double norm = 1.0L / std::sqrt(2.0L * std::numbers::pi_v<long double> * q.t);
  std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long double d = static_cast<long double>(q.x[i]) - q.y[j];
      m[i][j] = norm * std::exp(-d * d / (2.0L * q.t));
    }
  long double ratio = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      ratio *= (static_cast<long double>(q.y[j]) - q.y[i]) / (static_cast<long double>(q.x[j]) - q.x[i]);
  return static_cast<double>(ratio * detail::determinant(std::move(m)));
}

/// Symmetric Dunkl process density sum_rho p_k(t, y | rho x), assembled from
/// the weight w_k, the Selberg constant c_k and the symmetrized kernel:
///   w_k(y/sqrt t) e^{-(x^2+y^2)/2t} / (c_k t^{N/2}) * sum_rho E_k(rho x/sqrt t, y/sqrt t).
inline TpdResult dunkl_tpd_symmetric(const TpdQuery& q) {
  detail::check_query(q);
  const double k = q.k();
  const int n = static_cast<int>(q.x.size());
  const double rt = 1.0 / std::sqrt(q.t);
  const auto xs = detail::scaled(q.x, rt), ys = detail::scaled(q.y, rt);
  const double log_w = 2.0 * k * log_abs_vandermonde(ys) - 0.5 * k * n * (n - 1) * std::log(2.0);
  const double log_pref = log_w - (detail::sq_norm(q.x) + detail::sq_norm(q.y)) / (2.0 * q.t) -
                          log_selberg_constant(n, k) - 0.5 * n * std::log(q.t);
  TpdResult r;
  r.series = symmetrized_kernel(xs, ys, k, q.controls);
  r.value = std::exp(log_pref) * r.series.value;
  return r;
}

}  // namespace dunkl
