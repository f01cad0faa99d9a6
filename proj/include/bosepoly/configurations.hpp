#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bosepoly/rational.hpp"

namespace bosepoly {

/// Ordering verdict for two configurations under the componentwise order.
enum class Order { LessOrEqual, GreaterOrEqual, Equal, Incomparable };

/// A configuration of N bosons in d orbitals: a nondecreasing tuple of
/// orbital indices (1-based). Immutable after construction.
class Configuration {
 public:
  Configuration(std::vector<int> indices, int orbital_count)
      : indices_(std::move(indices)), d_(orbital_count) {
    if (indices_.empty()) throw PreconditionError("configuration needs N >= 1");
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      if (indices_[k] < 1 || indices_[k] > d_)
        throw PreconditionError("orbital index out of range [1, d]");
      if (k > 0 && indices_[k] < indices_[k - 1])
        throw PreconditionError("configuration indices must be nondecreasing");
    }
  }

  int particle_count() const { return static_cast<int>(indices_.size()); }
  int orbital_count() const { return d_; }
  const std::vector<int>& indices() const { return indices_; }

  /// Multiplicity of each orbital; entries sum to N.
  std::vector<int> occupation_vector() const {
    std::vector<int> counts(d_, 0);
    for (int i : indices_) ++counts[i - 1];
    return counts;
  }

  bool operator==(const Configuration& o) const {
    return d_ == o.d_ && indices_ == o.indices_;
  }
  bool operator<(const Configuration& o) const {  // lexicographic, for containers
    return indices_ < o.indices_;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(indices_[k]);
    }
    return s + ")";
  }

 private:
  std::vector<int> indices_;
  int d_;
};

inline std::vector<int> occupation_vector(const Configuration& c) {
  return c.occupation_vector();
}

/// Componentwise partial order of Eq-style dominance: a <= b iff every index
/// of a is <= the matching index of b.
inline Order compare(const Configuration& a, const Configuration& b) {
  if (a.particle_count() != b.particle_count() ||
      a.orbital_count() != b.orbital_count())
    throw DimensionError("configurations must share (N, d)");
  bool le = true, ge = true;
  for (int k = 0; k < a.particle_count(); ++k) {
    if (a.indices()[k] > b.indices()[k]) le = false;
    if (a.indices()[k] < b.indices()[k]) ge = false;
  }
  if (le && ge) return Order::Equal;
  if (le) return Order::LessOrEqual;
  if (ge) return Order::GreaterOrEqual;
  return Order::Incomparable;
}

/// All of I_{N,d} in lexicographic order on the index tuple.
inline std::vector<Configuration> enumerate_configurations(int N, int d) {
  if (N < 1 || d < 1) throw PreconditionError("need N >= 1 and d >= 1");
  std::vector<Configuration> out;
  std::vector<int> idx(N, 1);
  while (true) {
    out.emplace_back(idx, d);
    int k = N - 1;
    while (k >= 0 && idx[k] == d) --k;
    if (k < 0) break;
    const int v = idx[k] + 1;
    for (int j = k; j < N; ++j) idx[j] = v;
  }
  return out;
}

/// Minimal elements of I_{N,d} \ ideal; the ideal must be down-closed.
inline std::set<Configuration> minimal_successors(
    const std::set<Configuration>& ideal, int N, int d) {
  for (const auto& c : ideal)
    if (c.particle_count() != N || c.orbital_count() != d)
      throw DimensionError("ideal members must share (N, d)");
  const auto all = enumerate_configurations(N, d);
  // Down-closure check.
  for (const auto& c : ideal)
    for (const auto& x : all) {
      const Order o = compare(x, c);
      if ((o == Order::LessOrEqual || o == Order::Equal) && !ideal.count(x))
        throw PreconditionError("ideal is not down-closed: misses " + x.str());
    }
  std::set<Configuration> out;
  for (const auto& x : all) {
    if (ideal.count(x)) continue;
    bool minimal = true;
    for (const auto& y : all) {
      if (ideal.count(y) || y == x) continue;
      if (compare(y, x) == Order::LessOrEqual) { minimal = false; break; }
    }
    if (minimal) out.insert(x);
  }
  return out;
}

}  // namespace bosepoly
