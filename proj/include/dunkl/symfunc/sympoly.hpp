// Homogeneous symmetric polynomials with exact coefficients.
#pragma once

#include "dunkl/partition.hpp"
#include "dunkl/symfunc/evaluate.hpp"
#include "dunkl/symfunc/jack.hpp"

#include <map>
#include <span>
#include <string>

namespace dunkl {

enum class Basis { Monomial, JackP };

/// Sparse Partition -> coefficient map in one basis. Every key has modulus
/// `degree` and length <= n_vars; zero coefficients are never stored.
class SymPoly {
 public:
  SymPoly(Basis basis, int degree, int n_vars, Rational alpha = Rational(0))
      : basis_(basis), alpha_(std::move(alpha)), degree_(degree), n_vars_(n_vars) {
    if (degree < 0) throw DomainError("SymPoly: negative degree");
    if (n_vars < 1) throw DomainError("SymPoly: N must be positive");
    if (basis == Basis::JackP) detail::check_alpha_positive(alpha_);
  }

  static SymPoly monomial(const Partition& lambda, int n_vars) {
    SymPoly p(Basis::Monomial, lambda.modulus(), n_vars);
    p.add(lambda, Rational(1));
    return p;
  }

  Basis basis() const noexcept { return basis_; }
  const Rational& alpha() const noexcept { return alpha_; }
  int degree() const noexcept { return degree_; }
  int n_vars() const noexcept { return n_vars_; }
  const std::map<Partition, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Partition& key, const Rational& c) {
    if (key.modulus() != degree_)
      throw DomainError("SymPoly: term " + key.to_string() + " has wrong degree (expected " +
                        std::to_string(degree_) + ")");
    if (key.length() > n_vars_)
      throw DomainError("SymPoly: term " + key.to_string() + " longer than N=" + std::to_string(n_vars_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  SymPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= s;
    }
    return *this;
  }

  SymPoly& operator+=(const SymPoly& other) {
    if (other.basis_ != basis_ || other.degree_ != degree_ || other.n_vars_ != n_vars_ ||
        (basis_ == Basis::JackP && other.alpha_ != alpha_))
      throw DomainError("SymPoly: adding polynomials of different shape");
    for (const auto& [k, v] : other.terms_) add(k, v);
    return *this;
  }

  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.n_vars_ == b.n_vars_ &&
           (a.basis_ == Basis::Monomial || a.alpha_ == b.alpha_) && a.terms_ == b.terms_;
  }

  /// Same polynomial in the monomial basis.
  SymPoly to_monomial() const {
    if (basis_ == Basis::Monomial) return *this;
    SymPoly out(Basis::Monomial, degree_, n_vars_);
    for (const auto& [tau, c] : terms_)
      for (const auto& [lambda, u] : jack_expansion(tau, alpha_, n_vars_).u) out.add(lambda, c * u);
    return out;
  }

  double evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_vars_)
      throw DomainError("SymPoly::evaluate: expected " + std::to_string(n_vars_) + " coordinates");
    double total = 0.0;
    for (const auto& [key, c] : terms_)
      total += to_double(c) * (basis_ == Basis::Monomial ? eval_monomial(key, x) : eval_jack(key, alpha_, x));
    return total;
  }

 private:
  Basis basis_;
  Rational alpha_;
  int degree_;
  int n_vars_;
  std::map<Partition, Rational> terms_;
};

}  // namespace dunkl
