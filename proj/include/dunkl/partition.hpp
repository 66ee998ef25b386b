// Integer partitions: the index set of every symmetric-function basis.
#pragma once

#include "dunkl/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

/// Weakly decreasing sequence of positive parts; trailing zeros are never stored.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  int modulus() const noexcept {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  /// Part i (0-based); zero past the stored length.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Parts padded with zeros to exactly n entries (n >= length()).
  std::vector<int> padded(int n) const {
    std::vector<int> v(parts_);
    v.resize(static_cast<std::size_t>(std::max(n, length())), 0);
    return v;
  }

  // Lexicographic on the stored parts; equals lexicographic order on padded
  // vectors for partitions of equal modulus.
  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  /// "2,1,1"; the empty partition prints as "0".
  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
  }

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.to_string() << ')';
}

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

enum class Dominance { Less, Equal, Greater, Incomparable };

inline const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Equal: return "Equal";
    case Dominance::Greater: return "Greater";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

/// Parses "2,1,1" (spaces allowed); "0" or "" gives the empty partition.
inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    for (char c : token)
      if (c < '0' || c > '9') throw ParseError("bad partition part '" + token + "'");
    if (token.size() > 6) throw ParseError("partition part too large: '" + token + "'");
    parts.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      if (token.empty()) throw ParseError("empty partition part in '" + std::string(text) + "'");
      flush();
    } else if (c != ' ') {
      token.push_back(c);
    }
  }
  flush();
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid partition '") + std::string(text) + "': " + e.what());
  }
}

/// All partitions of n with at most max_len parts, in reverse-lexicographic
/// order: (n) first, then (n-1,1), ... This order is a linear extension of
/// dominance, so a dominating partition always precedes the ones it dominates.
inline std::vector<Partition> enumerate_partitions(int n, int max_len) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be non-negative");
  if (max_len < 1) throw DomainError("enumerate_partitions: max_len must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline Partition conjugate(const Partition& tau) {
  std::vector<int> c(static_cast<std::size_t>(tau[0]), 0);
  for (int part : tau.parts())
    for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

inline Dominance dominance_compare(const Partition& lambda, const Partition& mu) {
  if (lambda.modulus() != mu.modulus())
    throw DomainError("dominance_compare: partitions " + lambda.to_string() + " and " +
                      mu.to_string() + " have different moduli");
  if (lambda == mu) return Dominance::Equal;
  const int len = std::max(lambda.length(), mu.length());
  bool le = true, ge = true;
  int sl = 0, sm = 0;
  for (int j = 0; j < len; ++j) {
    sl += lambda[static_cast<std::size_t>(j)];
    sm += mu[static_cast<std::size_t>(j)];
    if (sl > sm) le = false;
    if (sl < sm) ge = false;
  }
  if (le) return Dominance::Less;
  if (ge) return Dominance::Greater;
  return Dominance::Incomparable;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Number of distinct permutations of mu viewed as an N-vector (zeros padded).
inline BigInt multiplicity_count(const Partition& mu, int n_vars) {
  if (mu.length() > n_vars)
    throw DomainError("multiplicity_count: partition " + mu.to_string() + " longer than N=" +
                      std::to_string(n_vars));
  std::map<int, int> mult;
  for (int v : mu.padded(n_vars)) ++mult[v];
  BigInt r = factorial(n_vars);
  for (const auto& [value, count] : mult) r /= factorial(count);
  return r;
}

/// Product of the factorials of the parts.
inline BigInt partition_factorial(const Partition& tau) {
  BigInt r = 1;
  for (int p : tau.parts()) r *= factorial(p);
  return r;
}

}  // namespace dunkl
