// Point evaluation of the monomial, elementary, Schur and Jack bases.
#pragma once

#include "dunkl/partition.hpp"
#include "dunkl/symfunc/jack.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace dunkl {

/// m_lambda(x): sum over the distinct permutations of lambda padded to N = x.size().
template <class T>
T eval_monomial(const Partition& lambda, std::span<const T> x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n)
    throw DomainError("eval_monomial: l(" + lambda.to_string() + ") > N=" + std::to_string(n));
  std::vector<int> exps = lambda.padded(n);
  std::sort(exps.begin(), exps.end());
  T total(0);
  do {
    T term(1);
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < exps[static_cast<std::size_t>(i)]; ++e) term *= x[static_cast<std::size_t>(i)];
    total += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

template <class T>
T eval_monomial(const Partition& lambda, const std::vector<T>& x) {
  return eval_monomial(lambda, std::span<const T>(x));
}

/// e_0(x), ..., e_N(x).
template <class T>
std::vector<T> elementary_all(std::span<const T> x) {
  std::vector<T> e(x.size() + 1, T(0));
  e[0] = T(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += e[j - 1] * x[i];
  return e;
}

template <class T>
T eval_elementary(int n, std::span<const T> x) {
  if (n < 0 || n > static_cast<int>(x.size()))
    throw DomainError("eval_elementary: need 0 <= n <= N, got n=" + std::to_string(n));
  return elementary_all(x)[static_cast<std::size_t>(n)];
}

template <class T>
T eval_elementary(int n, const std::vector<T>& x) {
  return eval_elementary(n, std::span<const T>(x));
}

/// e_tau(x) = prod_i e_{tau_i}(x).
template <class T>
T eval_elementary_partition(const Partition& tau, std::span<const T> x) {
  auto e = elementary_all(x);
  T r(1);
  for (int p : tau.parts()) {
    if (p > static_cast<int>(x.size()))
      throw DomainError("eval_elementary_partition: part " + std::to_string(p) + " exceeds N");
    r *= e[static_cast<std::size_t>(p)];
  }
  return r;
}

template <class T>
T eval_elementary_partition(const Partition& tau, const std::vector<T>& x) {
  return eval_elementary_partition(tau, std::span<const T>(x));
}

/// P_tau^{(alpha)}(x) from the exact monomial expansion.
inline double eval_jack(const Partition& tau, const Rational& alpha, std::span<const double> x) {
  const auto& row = jack_expansion(tau, alpha, static_cast<int>(x.size()));
  double total = 0.0;
  for (const auto& [lambda, u] : row.u) total += to_double(u) * eval_monomial(lambda, x);
  return total;
}

/// Schur function by the bialternant det[x_j^{tau_i+N-i}] / det[x_j^{N-i}].
/// Falls back to the Kostka expansion (Jack row at alpha = 1) when components
/// coincide or nearly coincide.
inline double eval_schur(const Partition& tau, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (tau.length() > n)
    throw DomainError("eval_schur: l(" + tau.to_string() + ") > N=" + std::to_string(n));
  if (n == 0) return 1.0;
  double scale = 1.0, min_gap = INFINITY;
  for (int i = 0; i < n; ++i) {
    scale = std::max(scale, std::abs(x[static_cast<std::size_t>(i)]));
    for (int j = i + 1; j < n; ++j)
      min_gap = std::min(min_gap, std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]));
  }
  if (n > 1 && min_gap <= 1e-6 * scale) return eval_jack(tau, Rational(1), x);

  Eigen::MatrixXd num(n, n), den(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double xj = x[static_cast<std::size_t>(j)];
      num(i, j) = std::pow(xj, tau[static_cast<std::size_t>(i)] + n - 1 - i);
      den(i, j) = std::pow(xj, n - 1 - i);
    }
  return num.determinant() / den.determinant();
}

}  // namespace dunkl
