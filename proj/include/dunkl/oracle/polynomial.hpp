// Exact multivariate polynomials over Q, used as an independent reference for
// the symmetric-function layer. Deliberately naive: dense exponent vectors,
// operators applied term by term.
#pragma once

#include "dunkl/partition.hpp"
#include "dunkl/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace dunkl::oracle {

using Exponent = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(int n_vars) : n_(n_vars) {}

  int n_vars() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  Polynomial operator*(const Rational& s) const {
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) out.add(e, c * s);
    return out;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial out(n_);
    for (const auto& [a, ca] : terms_)
      for (const auto& [b, cb] : o.terms_) {
        Exponent e(a);
        for (int i = 0; i < n_; ++i) e[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
        out.add(e, ca * cb);
      }
    return out;
  }
  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// x_i^p * d^q/dx_i^q applied to the polynomial.
  Polynomial shift_derivative(int i, int q, int p) const {
    Polynomial out(n_);
    const auto idx = static_cast<std::size_t>(i);
    for (const auto& [e, c] : terms_) {
      if (e[idx] < q) continue;
      Rational f = c;
      for (int r = 0; r < q; ++r) f *= e[idx] - r;
      Exponent g(e);
      g[idx] += p - q;
      out.add(g, f);
    }
    return out;
  }

  /// Exact quotient by (x_i - x_j); throws if the division leaves a remainder.
  Polynomial divide_difference(int i, int j) const {
    // Synthetic division in x_i with root x_i = x_j, one x_i-degree at a time.
    const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
    std::map<int, Polynomial> by_degree;
    int top = -1;
    for (const auto& [e, c] : terms_) {
      Exponent rest(e);
      const int d = rest[ii];
      rest[ii] = 0;
      by_degree.try_emplace(d, n_).first->second.add(rest, c);
      top = std::max(top, d);
    }
    Polynomial quotient(n_);
    Polynomial carry(n_);
    for (int d = top; d >= 1; --d) {
      Polynomial b = carry;
      if (auto it = by_degree.find(d); it != by_degree.end()) b += it->second;
      for (const auto& [e, c] : b.terms_) {
        Exponent g(e);
        g[ii] = d - 1;
        quotient.add(g, c);
      }
      carry = Polynomial(n_);
      for (const auto& [e, c] : b.terms_) {
        Exponent g(e);
        g[jj] += 1;
        carry.add(g, c);
      }
    }
    Polynomial remainder = carry;
    if (auto it = by_degree.find(0); it != by_degree.end()) remainder += it->second;
    if (!remainder.is_zero()) throw NumericError("divide_difference: nonzero remainder");
    return quotient;
  }

 private:
  int n_;
  std::map<Exponent, Rational> terms_;
};

/// Monomial symmetric polynomial m_lambda in n variables, built from the
/// distinct permutations of the padded exponent.
inline Polynomial monomial_symmetric(const Partition& lambda, int n_vars) {
  Polynomial p(n_vars);
  Exponent e(static_cast<std::size_t>(n_vars), 0);
  for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
  std::sort(e.begin(), e.end());
  do {
    p.add(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

/// sum_i x_i^2 d_i^2 + (2/alpha) sum_{i != j} x_i^2/(x_i - x_j) d_i, applied directly.
inline Polynomial jack_operator(const Polynomial& p, const Rational& alpha) {
  const int n = p.n_vars();
  Polynomial out(n);
  for (int i = 0; i < n; ++i) out += p.shift_derivative(i, 2, 2);
  const Rational c = Rational(2) / alpha;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Polynomial num = p.shift_derivative(i, 1, 2);
      num -= p.shift_derivative(j, 1, 2);
      out += num.divide_difference(i, j) * c;
    }
  return out;
}

/// Vandermonde prod_{i<j} (x_i - x_j).
inline Polynomial vandermonde(int n_vars) {
  Polynomial v(n_vars);
  v.add(Exponent(static_cast<std::size_t>(n_vars), 0), 1);
  for (int i = 0; i < n_vars; ++i)
    for (int j = i + 1; j < n_vars; ++j) {
      Polynomial f(n_vars);
      Exponent a(static_cast<std::size_t>(n_vars), 0), b(a);
      a[static_cast<std::size_t>(i)] = 1;
      b[static_cast<std::size_t>(j)] = 1;
      f.add(a, 1);
      f.add(b, -1);
      v = v * f;
    }
  return v;
}

/// Schur polynomial by the bialternant a_{lambda+delta} / a_delta, with the
/// alternant expanded over permutations and the quotient taken by exact division.
inline Polynomial schur_bialternant(const Partition& lambda, int n_vars) {
  if (lambda.length() > n_vars) throw DomainError("schur_bialternant: l(lambda) > N");
  const auto n = static_cast<std::size_t>(n_vars);
  std::vector<int> shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = lambda[i] + static_cast<int>(n - 1 - i);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial alt(n_vars);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e[perm[i]] = shifted[i];
    alt.add(e, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int i = 0; i < n_vars; ++i)
    for (int j = i + 1; j < n_vars; ++j) alt = alt.divide_difference(i, j);
  return alt;
}

/// Coefficients of a symmetric polynomial on m_lambda (read from sorted exponents).
inline std::map<Partition, Rational> monomial_coefficients(const Polynomial& p) {
  std::map<Partition, Rational> out;
  for (const auto& [e, c] : p.terms()) {
    if (!std::is_sorted(e.begin(), e.end(), std::greater<>())) continue;
    out.emplace(Partition(std::vector<int>(e.begin(), e.end())), c);
  }
  return out;
}

}  // namespace dunkl::oracle
