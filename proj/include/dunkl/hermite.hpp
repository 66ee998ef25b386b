// Roots of the physicists' Hermite polynomials and their classical identities.
#pragma once

#include "dunkl/rational.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace dunkl {

struct HermiteRoots {
  int n = 0;
  std::vector<double> roots;  ///< strictly increasing
};

/// (H_n(x), H_{n-1}(x)) by the three-term recurrence H_{m+1} = 2x H_m - 2m H_{m-1}.
inline std::pair<double, double> hermite_pair(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double prev = 1.0, cur = 2.0 * x;
  for (int m = 1; m < n; ++m) {
    const double next = 2.0 * x * cur - 2.0 * m * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

inline double hermite_value(int n, double x) { return hermite_pair(n, x).first; }

namespace detail {

inline HermiteRoots compute_hermite_roots(int n) {
  // Golub-Welsch: eigenvalues of the symmetric tridiagonal Jacobi matrix with
  // zero diagonal and off-diagonal sqrt(m/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int m = 1; m < n; ++m) sub(m - 1) = std::sqrt(m / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("hermite_roots: eigenvalue solver failed");
  HermiteRoots r{n, std::vector<double>(solver.eigenvalues().data(), solver.eigenvalues().data() + n)};
  for (double& z : r.roots) {
    // one Newton polish step, H_n' = 2n H_{n-1}
    const auto [h, hm1] = hermite_pair(n, z);
    if (hm1 != 0.0) z -= h / (2.0 * n * hm1);
  }
  // exact symmetry about the origin
  for (int i = 0; i < n / 2; ++i) {
    const double a = 0.5 * (r.roots[static_cast<std::size_t>(n - 1 - i)] - r.roots[static_cast<std::size_t>(i)]);
    r.roots[static_cast<std::size_t>(i)] = -a;
    r.roots[static_cast<std::size_t>(n - 1 - i)] = a;
  }
  if (n % 2 == 1) r.roots[static_cast<std::size_t>(n / 2)] = 0.0;
  return r;
}

}  // namespace detail

/// The N real roots of H_N, ascending; 1 <= N <= 50. Cached after first use.
inline const HermiteRoots& hermite_roots(int n) {
  if (n < 1 || n > 50) throw DomainError("hermite_roots: N must be in [1, 50], got " + std::to_string(n));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const HermiteRoots>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const HermiteRoots>(detail::compute_hermite_roots(n));
  return *slot;
}

struct RootIdentityReport {
  int n = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  double sum_sq_reference = 0.0;   ///< N(N-1)/2
  double log_discriminant = 0.0;   ///< 2 log |h_N(z_N)|
  double log_discriminant_reference = 0.0;  ///< sum_j j log j - (N/2)(N-1) log 2
  double fixed_point_residual = 0.0;  ///< max_i |z_i - sum_{j!=i} 1/(z_i - z_j)|
  double max_hermite_residual = 0.0;  ///< max_i |H_N(z_i)| / (|H_N'(z_i)| * (1 + |z_i|))
};

inline RootIdentityReport root_identities(int n) {
  const auto& z = hermite_roots(n).roots;
  RootIdentityReport r;
  r.n = n;
  r.sum_sq_reference = 0.5 * n * (n - 1);
  for (int j = 1; j <= n; ++j) r.log_discriminant_reference += j * std::log(static_cast<double>(j));
  r.log_discriminant_reference -= 0.5 * n * (n - 1) * std::log(2.0);
  // pairwise sums in a fixed order
  for (double v : z) {
    r.sum += v;
    r.sum_sq += v * v;
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    double field = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      field += 1.0 / (z[i] - z[j]);
      if (j > i) r.log_discriminant += 2.0 * std::log(z[j] - z[i]);
    }
    r.fixed_point_residual = std::max(r.fixed_point_residual, std::abs(z[i] - field));
    const auto [h, hm1] = hermite_pair(n, z[i]);
    const double scale = std::abs(2.0 * n * hm1) * (1.0 + std::abs(z[i]));
    r.max_hermite_residual = std::max(r.max_hermite_residual, scale > 0 ? std::abs(h) / scale : std::abs(h));
  }
  return r;
}

}  // namespace dunkl
