// Generalized hypergeometric series 0F0^{(1/k)}(x, y) in Jack polynomials and
// the symmetrized Dunkl kernel sum_rho E_k(rho x, y) = N! 0F0^{(1/k)}(x, y).
#pragma once

#include "dunkl/intertwine.hpp"
#include "dunkl/partition.hpp"
#include "dunkl/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace dunkl {

struct SeriesControls {
  int max_degree = 40;
  double rel_tol = 1e-12;
};

struct SeriesResult {
  double value = 0.0;
  int degree = 0;           ///< last degree layer included
  double last_layer = 0.0;  ///< majorant of that layer's contribution
  bool converged = false;
};

namespace detail {

using Wide = long double;

// All monomial symmetric functions of one degree at x, using a power table.
inline std::vector<Wide> monomials_at(const MonomialOperator& op, const std::vector<Wide>& x) {
  const int n = op.n_vars;
  const int d = op.degree;
  std::vector<std::vector<Wide>> pw(static_cast<std::size_t>(n), std::vector<Wide>(static_cast<std::size_t>(d + 1)));
  for (int i = 0; i < n; ++i) {
    auto& row = pw[static_cast<std::size_t>(i)];
    row[0] = 1;
    for (int e = 1; e <= d; ++e) row[static_cast<std::size_t>(e)] = row[static_cast<std::size_t>(e - 1)] * x[static_cast<std::size_t>(i)];
  }
  std::vector<Wide> out(op.basis.size());
  for (std::size_t l = 0; l < op.basis.size(); ++l) {
    std::vector<int> exps = op.basis[l].padded(n);
    std::sort(exps.begin(), exps.end());
    Wide total = 0;
    do {
      Wide term = 1;
      for (int i = 0; i < n; ++i) term *= pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(exps[static_cast<std::size_t>(i)])];
      total += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    out[l] = total;
  }
  return out;
}

}  // namespace detail

/// Truncated 0F0^{(1/k)}(x, y) = sum_n sum_{|tau|=n} c_tau/c'_tau P_tau(x) P_tau(y) / (kN)_tau.
///
/// Stops after the first degree layer whose majorant sum_tau w_tau P_tau(|x|) P_tau(|y|)
/// falls below rel_tol * |partial sum|; Jack coefficients are non-negative so
/// the majorant bounds the layer. If max_degree is reached first the result is
/// returned with converged = false.
inline SeriesResult hypergeom_00(std::span<const double> x, std::span<const double> y, double k,
                                 const SeriesControls& controls = {}) {
  using detail::Wide;
  if (x.size() != y.size()) throw DomainError("hypergeom_00: x and y must have the same length");
  if (x.empty()) throw DomainError("hypergeom_00: empty vectors");
  if (!(k > 0) || !std::isfinite(k)) throw DomainError("hypergeom_00: k must be positive and finite");
  if (controls.max_degree < 0) throw DomainError("hypergeom_00: max_degree must be non-negative");
  const int n_vars = static_cast<int>(x.size());
  const Wide kw = k;
  const Wide alpha = Wide(1) / kw;

  std::vector<Wide> xs(x.begin(), x.end()), ys(y.begin(), y.end()), xa(xs), ya(ys);
  for (auto& v : xa) v = std::fabs(v);
  for (auto& v : ya) v = std::fabs(v);

  SeriesResult res;
  Wide sum = 1;
  res.converged = controls.max_degree == 0;
  for (int degree = 1; degree <= controls.max_degree; ++degree) {
    auto layer = jack_layer<Wide>(degree, alpha, n_vars);
    const MonomialOperator& op = *layer->op;
    const auto mx = detail::monomials_at(op, xs), my = detail::monomials_at(op, ys);
    const auto max_ = detail::monomials_at(op, xa), may = detail::monomials_at(op, ya);
    Wide contrib = 0, majorant = 0;
    for (std::size_t t = 0; t < op.basis.size(); ++t) {
      const auto& row = layer->rows[t];
      Wide px = 0, py = 0, pax = 0, pay = 0;
      for (std::size_t l = t; l < row.size(); ++l) {
        if (row[l] == 0) continue;
        px += row[l] * mx[l];
        py += row[l] * my[l];
        pax += row[l] * max_[l];
        pay += row[l] * may[l];
      }
      const Wide w = kernel_weight<Wide>(op.basis[t], kw, n_vars);
      contrib += w * px * py;
      majorant += w * pax * pay;
    }
    sum += contrib;
    res.degree = degree;
    res.last_layer = static_cast<double>(majorant);
    if (majorant < Wide(controls.rel_tol) * std::fabs(sum)) {
      res.converged = true;
      break;
    }
  }
  res.value = static_cast<double>(sum);
  return res;
}

/// sum_rho E_k(rho x, y) = N! 0F0^{(1/k)}(x, y).
inline SeriesResult symmetrized_kernel(std::span<const double> x, std::span<const double> y, double k,
                                       const SeriesControls& controls = {}) {
  SeriesResult r = hypergeom_00(x, y, k, controls);
  r.value *= std::exp(std::lgamma(static_cast<double>(x.size()) + 1.0));
  return r;
}

}  // namespace dunkl
