// Action of the type-A intertwining operator V_k on symmetric polynomials.
//
//   V_k m_lambda = lambda! M(lambda,N) sum_{|tau|=|lambda|, l(tau)<=N}
//                  c_tau(1/k) / c'_tau(1/k) * u_{tau,lambda}(1/k) / (kN)_tau^{(1/k)} * P_tau^{(1/k)}
//
// and its k -> infinity limit M(lambda,N)/N^|lambda| (x . 1)^|lambda|.
#pragma once

#include "dunkl/partition.hpp"
#include "dunkl/symfunc.hpp"

#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

struct IntertwineResult {
  Partition lambda;
  Rational k;
  int n_vars = 0;
  SymPoly output;  ///< monomial basis, degree |lambda|
};

namespace detail {
inline void check_intertwine_args(const Partition& lambda, int n_vars) {
  if (n_vars < 1) throw DomainError("intertwine: N must be positive");
  if (lambda.length() > n_vars)
    throw DomainError("intertwine: l(" + lambda.to_string() + ") > N=" + std::to_string(n_vars));
}
}  // namespace detail

/// Weight c_tau(1/k) / (c'_tau(1/k) (kN)_tau^{(1/k)}) multiplying P_tau(x)P_tau(y)
/// in the hypergeometric series and u_{tau,lambda} P_tau in V_k m_lambda.
template <class Scalar>
Scalar kernel_weight(const Partition& tau, const Scalar& k, int n_vars) {
  const Scalar alpha = Scalar(1) / k;
  const auto hooks = hook_products(tau, alpha);
  return hooks.lower / (hooks.upper * pochhammer_general(k * Scalar(n_vars), tau, alpha));
}

inline IntertwineResult intertwine_monomial(const Partition& lambda, const Rational& k, int n_vars) {
  detail::check_intertwine_args(lambda, n_vars);
  if (k < 0) throw DomainError("intertwine: k must be non-negative, got " + to_string(k));
  IntertwineResult result{lambda, k, n_vars, SymPoly::monomial(lambda, n_vars)};
  if (k == 0) return result;

  const int degree = lambda.modulus();
  const Rational alpha = Rational(1) / k;
  const Rational prefactor(partition_factorial(lambda) * multiplicity_count(lambda, n_vars));
  SymPoly out(Basis::Monomial, degree, n_vars);
  for (const Partition& tau : enumerate_partitions(degree, n_vars)) {
    const auto& row = jack_expansion(tau, alpha, n_vars);
    const Rational u_tl = row.coefficient(lambda);
    if (u_tl == 0) continue;
    const Rational w = prefactor * kernel_weight(tau, k, n_vars) * u_tl;
    for (const auto& [mu, u_tm] : row.u) out.add(mu, w * u_tm);
  }
  result.output = std::move(out);
  return result;
}

/// V_k applied to an arbitrary monomial-basis SymPoly (linear extension).
inline SymPoly intertwine(const SymPoly& p, const Rational& k) {
  const SymPoly mono = p.to_monomial();
  SymPoly out(Basis::Monomial, mono.degree(), mono.n_vars());
  for (const auto& [lambda, c] : mono.terms()) {
    SymPoly term = intertwine_monomial(lambda, k, mono.n_vars()).output;
    term *= c;
    out += term;
  }
  return out;
}

struct IntertwineLimit {
  Partition lambda;
  int n_vars = 0;
  Rational coefficient;  ///< M(lambda,N) / N^|lambda|
  int power = 0;         ///< the limit is coefficient * (x . 1)^power
  SymPoly e1_power;      ///< (x . 1)^power in monomials: sum_mu |lambda|!/mu! m_mu

  SymPoly monomial_form() const {
    SymPoly p = e1_power;
    p *= coefficient;
    return p;
  }
};

inline SymPoly power_sum_one_expansion(int degree, int n_vars) {
  SymPoly p(Basis::Monomial, degree, n_vars);
  const BigInt nf = factorial(degree);
  for (const Partition& mu : enumerate_partitions(degree, n_vars))
    p.add(mu, Rational(nf, partition_factorial(mu)));
  return p;
}

inline IntertwineLimit intertwine_limit(const Partition& lambda, int n_vars) {
  detail::check_intertwine_args(lambda, n_vars);
  const int degree = lambda.modulus();
  BigInt n_pow = 1;
  for (int i = 0; i < degree; ++i) n_pow *= n_vars;
  return IntertwineLimit{lambda, n_vars, Rational(multiplicity_count(lambda, n_vars), n_pow), degree,
                         power_sum_one_expansion(degree, n_vars)};
}

enum class NonsymCase { Linear, QuadN2, QuadN3 };

/// Closed forms of V_k on x_i (any N) and x_i^2 (N = 2, 3). i is 0-based.
inline double nonsym_reference(NonsymCase which, int i, double k, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (i < 0 || i >= n) throw DomainError("nonsym_reference: index out of range");
  if (k < 0) throw DomainError("nonsym_reference: k must be non-negative");
  double s = 0.0, sq = 0.0;
  for (double v : x) {
    s += v;
    sq += v * v;
  }
  const double xi = x[static_cast<std::size_t>(i)];
  switch (which) {
    case NonsymCase::Linear:
      return (xi + k * s) / (1.0 + n * k);
    case NonsymCase::QuadN2:
      if (n != 2) throw DomainError("nonsym_reference: quadratic formula available for N=2 and N=3 only");
      return (2.0 * xi * xi + k * s * s) / (2.0 * (1.0 + 2.0 * k));
    case NonsymCase::QuadN3:
      if (n != 3) throw DomainError("nonsym_reference: quadratic formula available for N=2 and N=3 only");
      return (2.0 * xi * (xi + k * s) + k * (sq + k * s * s)) / ((2.0 + 3.0 * k) * (1.0 + 3.0 * k));
  }
  throw DomainError("nonsym_reference: unsupported case");
}

}  // namespace dunkl
