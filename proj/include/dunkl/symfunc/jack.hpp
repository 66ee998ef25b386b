// Jack polynomials in the P normalization, hook products, generalized
// Pochhammer symbols and the P/C normalization conversions.
#pragma once

#include "dunkl/partition.hpp"
#include "dunkl/symfunc/monomial_operator.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

namespace dunkl {

/// Row u_{tau,lambda}(alpha) of the monomial expansion
/// P_tau = sum_{lambda <= tau} u_{tau,lambda} m_lambda, together with the
/// eigenvalue of sum x_i^2 d_i^2 + 2k sum_{i!=j} x_i^2/(x_i-x_j) d_i, k = 1/alpha.
template <class Scalar>
struct JackExpansion {
  Partition tau;
  Scalar alpha{};
  int n_vars = 0;
  std::map<Partition, Scalar> u;
  Scalar eigenvalue{};

  Scalar coefficient(const Partition& lambda) const {
    auto it = u.find(lambda);
    return it == u.end() ? Scalar(0) : it->second;
  }
};

namespace detail {

inline void check_alpha_positive(const Rational& alpha) {
  if (alpha <= 0) throw DomainError("Jack parameter alpha must be positive, got " + to_string(alpha));
}
template <class Scalar>
void check_alpha_positive(const Scalar& alpha) {
  if (!(alpha > 0)) throw DomainError("Jack parameter alpha must be positive");
}

template <class Scalar>
std::string scalar_text(const Scalar& s) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return to_string(s);
  } else {
    std::ostringstream os;
    os.precision(17);
    os << static_cast<long double>(s);
    return os.str();
  }
}

/// Dense row of u over op.basis for the partition at tau_index.
///
/// Uses the eigenrelation of the rescaled operator (alpha/2) D1 + D2, whose
/// diagonal on m_lambda is (alpha/2) d1(lambda) + d2(lambda):
///   u_lambda (E'_tau - E'_lambda) = sum_{mu > lambda} b_{mu,lambda} u_mu.
/// The basis order is a linear extension of dominance, so one forward sweep
/// from tau suffices; entries not dominated by tau come out zero.
template <class Scalar>
std::vector<Scalar> jack_row_dense(const MonomialOperator& op, int tau_index, const Scalar& alpha) {
  const std::size_t size = op.basis.size();
  std::vector<Scalar> u(size, Scalar(0));
  const auto t = static_cast<std::size_t>(tau_index);
  u[t] = Scalar(1);
  const Scalar half_alpha = alpha / Scalar(2);
  const Scalar e_tau = half_alpha * Scalar(op.second_order[t]) + Scalar(op.first_order[t]);
  for (std::size_t l = t + 1; l < size; ++l) {
    Scalar acc(0);
    bool any = false;
    for (const auto& [mu, b] : op.raising[l]) {
      const auto m = static_cast<std::size_t>(mu);
      if (m < t || u[m] == Scalar(0)) continue;
      acc += Scalar(b) * u[m];
      any = true;
    }
    if (!any) continue;
    const Scalar denom = e_tau - (half_alpha * Scalar(op.second_order[l]) + Scalar(op.first_order[l]));
    if (denom == Scalar(0))
      throw NumericError("degenerate Jack spectrum: E(" + op.basis[t].to_string() + ") == E(" +
                         op.basis[l].to_string() + ") at alpha=" + scalar_text(alpha) +
                         ", N=" + std::to_string(op.n_vars));
    u[l] = acc / denom;
  }
  return u;
}

template <class Scalar>
Scalar jack_eigenvalue(const MonomialOperator& op, int index, const Scalar& alpha) {
  const auto i = static_cast<std::size_t>(index);
  return Scalar(op.second_order[i]) + Scalar(2) / alpha * Scalar(op.first_order[i]);
}

}  // namespace detail

/// Eigenvalue E_{tau,k} of the Jack eigenoperator, k = 1/alpha.
template <class Scalar>
Scalar jack_eigenvalue(const Partition& tau, const Scalar& alpha, int n_vars) {
  detail::check_alpha_positive(alpha);
  Scalar d1(0), d2(0);
  for (int i = 0; i < tau.length(); ++i) {
    const long p = tau[static_cast<std::size_t>(i)];
    d1 += Scalar(p * (p - 1));
    d2 += Scalar(p * (n_vars - 1 - i));
  }
  return d1 + Scalar(2) / alpha * d2;
}

/// Computes the expansion without touching the memo table.
template <class Scalar>
JackExpansion<Scalar> compute_jack_expansion(const Partition& tau, const Scalar& alpha, int n_vars) {
  detail::check_alpha_positive(alpha);
  if (tau.length() > n_vars)
    throw DomainError("jack_expansion: l(" + tau.to_string() + ") > N=" + std::to_string(n_vars));
  auto op = monomial_operator(tau.modulus(), n_vars);
  const int t = op->index_of(tau);
  auto row = detail::jack_row_dense(*op, t, alpha);
  JackExpansion<Scalar> out{tau, alpha, n_vars, {}, detail::jack_eigenvalue(*op, t, alpha)};
  for (std::size_t l = 0; l < row.size(); ++l)
    if (row[l] != Scalar(0)) out.u.emplace(op->basis[l], row[l]);
  return out;
}

/// Exact Jack row, memoized by (tau, alpha, N). The returned reference stays
/// valid for the life of the program.
inline const JackExpansion<Rational>& jack_expansion(const Partition& tau, const Rational& alpha, int n_vars) {
  using Key = std::tuple<Partition, Rational, int>;
  static std::mutex mutex;
  static std::map<Key, JackExpansion<Rational>> memo;
  Key key{tau, alpha, n_vars};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto row = compute_jack_expansion(tau, alpha, n_vars);
  std::lock_guard lock(mutex);
  return memo.emplace(std::move(key), std::move(row)).first->second;
}

/// All Jack rows of one degree as a dense upper-triangular matrix over the
/// reverse-lex basis: rows[t][l] = u_{basis[t], basis[l]}.
template <class Scalar>
struct JackLayer {
  std::shared_ptr<const MonomialOperator> op;
  Scalar alpha{};
  std::vector<std::vector<Scalar>> rows;
};

/// Floating-point Jack layers, memoized by (degree, alpha, N). Intended for
/// the analytic layer where alpha is real.
template <class Scalar>
std::shared_ptr<const JackLayer<Scalar>> jack_layer(int degree, const Scalar& alpha, int n_vars) {
  detail::check_alpha_positive(alpha);
  using Key = std::tuple<int, Scalar, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const JackLayer<Scalar>>> memo;
  Key key{degree, alpha, n_vars};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto layer = std::make_shared<JackLayer<Scalar>>();
  layer->op = monomial_operator(degree, n_vars);
  layer->alpha = alpha;
  layer->rows.reserve(layer->op->basis.size());
  for (std::size_t t = 0; t < layer->op->basis.size(); ++t)
    layer->rows.push_back(detail::jack_row_dense(*layer->op, static_cast<int>(t), alpha));
  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.emplace(std::move(key), std::move(layer));
  return it->second;
}

/// (a)_tau^{(alpha)} = prod_i prod_{m < tau_i} (a - (i-1)/alpha + m).
template <class Scalar>
Scalar pochhammer_general(const Scalar& a, const Partition& tau, const Scalar& alpha) {
  detail::check_alpha_positive(alpha);
  Scalar r(1);
  for (int i = 0; i < tau.length(); ++i) {
    const Scalar base = a - Scalar(i) / alpha;
    for (int m = 0; m < tau[static_cast<std::size_t>(i)]; ++m) r *= base + Scalar(m);
  }
  return r;
}

template <class Scalar>
struct HookProducts {
  Scalar lower;  ///< c_tau(alpha)
  Scalar upper;  ///< c'_tau(alpha)
};

/// c_tau = prod (alpha(tau_i - j) + tau'_j - i + 1),
/// c'_tau = prod (alpha(tau_i - j + 1) + tau'_j - i), over cells (i, j).
template <class Scalar>
HookProducts<Scalar> hook_products(const Partition& tau, const Scalar& alpha) {
  detail::check_alpha_positive(alpha);
  const Partition conj = conjugate(tau);
  Scalar c(1), cp(1);
  for (int i = 1; i <= tau.length(); ++i) {
    const int arm_base = tau[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= arm_base; ++j) {
      const int leg = conj[static_cast<std::size_t>(j - 1)] - i;
      c *= alpha * Scalar(arm_base - j) + Scalar(leg + 1);
      cp *= alpha * Scalar(arm_base - j + 1) + Scalar(leg);
    }
  }
  return {c, cp};
}

namespace detail {
template <class Scalar>
Scalar integer_power(const Scalar& base, int e) {
  Scalar r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}
template <class Scalar>
Scalar factorial_as(int n) {
  Scalar r(1);
  for (int i = 2; i <= n; ++i) r *= Scalar(i);
  return r;
}
}  // namespace detail

/// Multiplier taking P to the C normalization: C_tau = alpha^|tau| |tau|! / c'_tau * P_tau.
template <class Scalar>
Scalar jack_c_from_p(const Partition& tau, const Scalar& alpha) {
  const int n = tau.modulus();
  return detail::integer_power(alpha, n) * detail::factorial_as<Scalar>(n) / hook_products(tau, alpha).upper;
}

/// P_tau^{(alpha)}(1, ..., 1) = alpha^|tau| (N/alpha)_tau / c_tau.
template <class Scalar>
Scalar jack_at_ones(const Partition& tau, const Scalar& alpha, int n_vars) {
  if (tau.length() > n_vars) return Scalar(0);
  return detail::integer_power(alpha, tau.modulus()) *
         pochhammer_general(Scalar(n_vars) / alpha, tau, alpha) / hook_products(tau, alpha).lower;
}

}  // namespace dunkl
