// Matrix of the Jack eigenoperator in the monomial basis.
//
// The operator is  sum_i x_i^2 d_i^2 + (2/alpha) sum_{i != j} x_i^2/(x_i - x_j) d_i.
// Write it as  D1 + (2/alpha) D2.  D1 is diagonal on m_lambda with entry
// sum_i lambda_i (lambda_i - 1).  D2 acts pairwise: for positions i < j and a
// monomial pair {x_i^a x_j^b, x_i^b x_j^a} with a > b,
//
//   (x_i^2 d_i - x_j^2 d_j)(x_i^a x_j^b + x_i^b x_j^a) / (x_i - x_j)
//     = a (x_i^a x_j^b + x_i^b x_j^a) + (a - b) sum_{b < p < a} x_i^p x_j^{a+b-p},
//
// and a single monomial with equal exponents a gets the factor a. Summed over
// all pairs this makes D2 diagonal entry sum_{i<j} max(lambda_i, lambda_j)
// = sum_i lambda_i (N - i) plus integer off-diagonal entries that move mass
// from a larger part to a smaller one. Those entries only map m_mu onto m_lambda
// with lambda strictly dominated by mu.
#pragma once

#include "dunkl/partition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace dunkl {

struct MonomialOperator {
  int degree = 0;
  int n_vars = 0;
  /// Partitions of `degree` with length <= n_vars, reverse-lexicographic.
  std::vector<Partition> basis;
  std::map<Partition, int> index;
  /// Diagonal of D1: sum_i lambda_i (lambda_i - 1).
  std::vector<long> second_order;
  /// Diagonal of D2: sum_i lambda_i (N - i), i 1-based.
  std::vector<long> first_order;
  /// raising[l] lists (mu, b): coefficient b of m_l in D2 m_mu, mu != l.
  /// Every listed mu strictly dominates basis[l] (so has a smaller index).
  std::vector<std::vector<std::pair<int, long>>> raising;

  int index_of(const Partition& p) const {
    auto it = index.find(p);
    if (it == index.end())
      throw DomainError("partition " + p.to_string() + " is not in the degree-" +
                        std::to_string(degree) + " basis for N=" + std::to_string(n_vars));
    return it->second;
  }
};

namespace detail {

inline MonomialOperator build_monomial_operator(int degree, int n_vars) {
  MonomialOperator op;
  op.degree = degree;
  op.n_vars = n_vars;
  op.basis = enumerate_partitions(degree, n_vars);
  const int size = static_cast<int>(op.basis.size());
  for (int i = 0; i < size; ++i) op.index.emplace(op.basis[static_cast<std::size_t>(i)], i);
  op.second_order.resize(static_cast<std::size_t>(size));
  op.first_order.resize(static_cast<std::size_t>(size));
  op.raising.resize(static_cast<std::size_t>(size));

  for (int l = 0; l < size; ++l) {
    const Partition& target = op.basis[static_cast<std::size_t>(l)];
    long d1 = 0, d2 = 0;
    for (int i = 0; i < target.length(); ++i) {
      const long part = target[static_cast<std::size_t>(i)];
      d1 += part * (part - 1);
      d2 += part * (n_vars - 1 - i);
    }
    op.second_order[static_cast<std::size_t>(l)] = d1;
    op.first_order[static_cast<std::size_t>(l)] = d2;

    std::map<int, long> sources;
    std::vector<int> kappa = target.padded(n_vars);
    for (int i = 0; i < n_vars; ++i) {
      for (int j = i + 1; j < n_vars; ++j) {
        const int ki = kappa[static_cast<std::size_t>(i)];
        const int kj = kappa[static_cast<std::size_t>(j)];
        const int sum = ki + kj, hi = std::max(ki, kj);
        for (int a = hi + 1; a <= sum; ++a) {
          const int b = sum - a;
          std::vector<int> src(kappa);
          src[static_cast<std::size_t>(i)] = a;
          src[static_cast<std::size_t>(j)] = b;
          std::sort(src.begin(), src.end(), std::greater<>());
          sources[op.index.at(Partition(src))] += a - b;
        }
      }
    }
    for (const auto& [mu, coeff] : sources) op.raising[static_cast<std::size_t>(l)].emplace_back(mu, coeff);
  }
  return op;
}

}  // namespace detail

/// Shared, immutable operator matrix for (degree, N); built once per key.
inline std::shared_ptr<const MonomialOperator> monomial_operator(int degree, int n_vars) {
  if (degree < 0) throw DomainError("monomial_operator: negative degree");
  if (n_vars < 1) throw DomainError("monomial_operator: N must be positive");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialOperator>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{degree, n_vars}];
  if (!slot) slot = std::make_shared<const MonomialOperator>(detail::build_monomial_operator(degree, n_vars));
  return slot;
}

}  // namespace dunkl
