// Marginal laws of the sorted non-colliding Brownian motion (beta = 2) at a
// fixed time, from the determinantal density by one-dimensional quadrature.
//
// For the symmetric version of the density,
//   E[prod_j g(y_j)] = det[ int y^a g(y) phi_t(y - x_b) dy ]_{a,b} / det[ int y^a phi_t(y - x_b) dy ],
// so with g = 1 + (w - 1) 1{y <= s} the generating function of the number of
// particles below s is a degree-N polynomial in w.
#pragma once

#include "dunkl/rational.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace dunkl::oracle {

class GrabinerMarginals {
 public:
  GrabinerMarginals(std::span<const double> x, double t) : x_(x.begin(), x.end()), t_(t) {
    if (x_.empty()) throw DomainError("GrabinerMarginals: empty x");
    if (!(t > 0)) throw DomainError("GrabinerMarginals: t must be positive");
    for (std::size_t i = 1; i < x_.size(); ++i)
      if (!(x_[i - 1] < x_[i])) throw DomainError("GrabinerMarginals: x must be strictly increasing");
    lo_ = x_.front() - 14.0 * std::sqrt(t_);
    hi_ = x_.back() + 14.0 * std::sqrt(t_);
    full_ = moments(hi_);
    det_full_ = full_.determinant();
  }

  /// det of the full moment matrix; equals prod_{a<b} (x_b - x_a).
  double normalization() const { return det_full_; }

  /// P(count of particles <= s == m) for m = 0..N.
  std::vector<double> count_distribution(double s) const {
    const int n = static_cast<int>(x_.size());
    const Eigen::MatrixXd partial = moments(std::clamp(s, lo_, hi_));
    Eigen::MatrixXd v(n + 1, n + 1);
    Eigen::VectorXd g(n + 1);
    for (int w = 0; w <= n; ++w) {
      g(w) = (full_ + (w - 1.0) * partial).determinant() / det_full_;
      for (int m = 0; m <= n; ++m) v(w, m) = std::pow(static_cast<double>(w), m);
    }
    const Eigen::VectorXd p = v.fullPivLu().solve(g);
    return std::vector<double>(p.data(), p.data() + p.size());
  }

  /// CDF of the c-th smallest particle (c = 0 is the lowest).
  double order_statistic_cdf(int c, double s) const {
    if (c < 0 || c >= static_cast<int>(x_.size())) throw DomainError("order_statistic_cdf: index out of range");
    const auto p = count_distribution(s);
    double acc = 0.0;
    for (std::size_t m = static_cast<std::size_t>(c) + 1; m < p.size(); ++m) acc += p[m];
    return std::clamp(acc, 0.0, 1.0);
  }

 private:
  Eigen::MatrixXd moments(double upper) const {
    const auto n = static_cast<Eigen::Index>(x_.size());
    Eigen::MatrixXd m(n, n);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * t_);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) {
        const double xb = x_[static_cast<std::size_t>(b)];
        auto f = [&](double y) { return std::pow(y, static_cast<double>(a)) * norm * std::exp(-(y - xb) * (y - xb) / (2.0 * t_)); };
        m(a, b) = upper <= lo_ ? 0.0
                               : boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo_, upper, 20, 1e-14);
      }
    return m;
  }

  std::vector<double> x_;
  double t_;
  double lo_ = 0.0, hi_ = 0.0;
  Eigen::MatrixXd full_;
  double det_full_ = 0.0;
};

}  // namespace dunkl::oracle
