#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "bosepoly/configurations.hpp"
#include "bosepoly/linprog.hpp"
#include "bosepoly/rational.hpp"

namespace bosepoly {

/// An ordered list of the r energetically lowest configurations for some
/// strictly increasing one-particle spectrum h. Every prefix is an order
/// ideal of the configuration poset and is itself a lineup.
struct Lineup {
  std::vector<Configuration> sequence;
  int r() const { return static_cast<int>(sequence.size()); }
};

namespace detail {

// Excitation form of a configuration: the multiset of (index - 1) values,
// kept as a weakly decreasing partition. The ground configuration (1,...,1)
// is the empty partition. The poset order is Young-diagram containment,
// which is independent of N and d; both enter only as a bounding box.
using Partition = std::vector<int>;

inline Partition to_partition(const Configuration& c) {
  Partition p;
  const auto& idx = c.indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it)
    if (*it > 1) p.push_back(*it - 1);
  return p;  // indices nondecreasing => reversed excitations decreasing
}

inline Configuration to_configuration(const Partition& p, int N, int d) {
  std::vector<int> idx(N - static_cast<int>(p.size()), 1);
  for (auto it = p.rbegin(); it != p.rend(); ++it) idx.push_back(*it + 1);
  return Configuration(std::move(idx), d);
}

inline std::vector<int> occupation(const Partition& p, int N, int d) {
  std::vector<int> occ(d, 0);
  occ[0] = N - static_cast<int>(p.size());
  for (int v : p) ++occ[v];
  return occ;
}

// Partitions covering p inside the (max_parts, max_value) box.
inline std::vector<Partition> covers(const Partition& p, int max_parts,
                                     int max_value) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((i == 0 || p[i] < p[i - 1]) && p[i] < max_value) {
      Partition q = p;
      ++q[i];
      out.push_back(std::move(q));
    }
  }
  if (static_cast<int>(p.size()) < max_parts && max_value >= 1) {
    Partition q = p;
    q.push_back(1);
    out.push_back(std::move(q));
  }
  return out;
}

// Partitions covered by p (one corner cell removed).
inline std::vector<Partition> corner_removals(const Partition& p) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i] == p[i + 1]) continue;  // not a corner row
    Partition q = p;
    if (--q[i] == 0) q.erase(q.begin() + i);
    out.push_back(std::move(q));
  }
  return out;
}

// Minimal elements of the complement of a nonempty ideal, inside the box.
inline std::vector<Partition> minimal_externals(const std::set<Partition>& ideal,
                                                int max_parts, int max_value) {
  std::set<Partition> cand;
  for (const auto& p : ideal)
    for (auto& c : covers(p, max_parts, max_value))
      if (!ideal.count(c)) cand.insert(std::move(c));
  std::vector<Partition> out;
  for (const auto& c : cand) {
    bool ok = true;
    for (const auto& q : corner_removals(c))
      if (!ideal.count(q)) { ok = false; break; }
    if (ok) out.push_back(c);
  }
  return out;
}

// Constraint row in gap coordinates g_i = h_{i+2} - h_{i+1} for the strict
// inequality E(to) - E(from) > 0. Row entries are suffix sums of the
// occupation difference, so they do not depend on N.
inline std::vector<long> energy_gap_row(const std::vector<int>& occ_from,
                                        const std::vector<int>& occ_to, int d) {
  std::vector<long> row(d - 1, 0);
  long suffix = 0;
  for (int j = d - 1; j >= 1; --j) {
    suffix += occ_to[j] - occ_from[j];
    row[j - 1] = suffix;
  }
  return row;
}

struct LineupSearch {
  int N, d, r;
  int max_parts, max_value;
  std::vector<Lineup>* sink = nullptr;  // null => count only
  std::uint64_t count = 0;

  // Rows for "seq is exactly the sorted prefix": strict h ordering, strict
  // chain order, and the last element beats every minimal external.
  std::vector<std::vector<long>> rows(const std::vector<Partition>& seq,
                                      const std::vector<Partition>& externals) const {
    std::vector<std::vector<long>> out;
    for (int i = 0; i < d - 1; ++i) {
      std::vector<long> e(d - 1, 0);
      e[i] = 1;
      out.push_back(std::move(e));
    }
    for (std::size_t j = 0; j + 1 < seq.size(); ++j)
      out.push_back(energy_gap_row(occupation(seq[j], N, d),
                                   occupation(seq[j + 1], N, d), d));
    const auto occ_last = occupation(seq.back(), N, d);
    for (const auto& x : externals)
      out.push_back(energy_gap_row(occ_last, occupation(x, N, d), d));
    return out;
  }

  static bool witness_ok(const std::vector<std::vector<long>>& rows,
                         const std::vector<Rat>& g) {
    for (const auto& row : rows) {
      Rat dot = 0;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) dot += Rat(row[j]) * g[j];
      if (dot <= 0) return false;
    }
    return true;
  }

  void dfs(std::vector<Partition>& seq, std::set<Partition>& ideal,
           const std::vector<Rat>& witness) {
    if (static_cast<int>(seq.size()) == r) {
      ++count;
      if (sink) {
        Lineup l;
        for (const auto& p : seq) l.sequence.push_back(to_configuration(p, N, d));
        sink->push_back(std::move(l));
      }
      return;
    }
    auto cands = minimal_externals(ideal, max_parts, max_value);
    // Deterministic order: lexicographic on the resulting index tuple.
    std::sort(cands.begin(), cands.end(), [&](const Partition& a, const Partition& b) {
      return to_configuration(a, N, d).indices() < to_configuration(b, N, d).indices();
    });
    for (const auto& c : cands) {
      seq.push_back(c);
      ideal.insert(c);
      const auto ext = minimal_externals(ideal, max_parts, max_value);
      const auto sys = rows(seq, ext);
      std::vector<Rat> w;
      bool ok = witness_ok(sys, witness);
      if (ok)
        w = witness;
      else
        ok = StrictConeOracle::feasible(sys, d - 1, &w);
      if (ok) dfs(seq, ideal, w);
      ideal.erase(c);
      seq.pop_back();
    }
  }
};

inline std::uint64_t run_lineups(int N, int d, int r, std::vector<Lineup>* sink) {
  if (r < 1) throw SizeError("lineup length r must be >= 1");
  if (N < r - 1 || d < r)
    throw SizeError("need N >= r-1 and d >= r for lineups of length r");
  LineupSearch s;
  s.N = N;
  s.d = d;
  s.r = r;
  s.max_parts = N;
  s.max_value = d - 1;
  s.sink = sink;
  std::vector<Partition> seq{Partition{}};
  std::set<Partition> ideal{Partition{}};
  std::vector<Rat> witness(std::max(d - 1, 0), Rat(1));  // h = (0,1,2,...)
  if (r >= 1) {
    // The ground configuration is the unique minimum; its own validity only
    // needs h strictly increasing, which the identity rows encode.
    const auto ext = minimal_externals(ideal, s.max_parts, s.max_value);
    const auto sys = s.rows(seq, ext);
    if (!LineupSearch::witness_ok(sys, witness) &&
        !StrictConeOracle::feasible(sys, d - 1, &witness))
      return 0;
    s.dfs(seq, ideal, witness);
  }
  return s.count;
}

}  // namespace detail

/// Every lineup of length r for N bosons in d orbitals, in lexicographic
/// order on the configuration sequences. Requires N >= r-1 and d >= r.
inline std::vector<Lineup> enumerate_lineups(int N, int d, int r) {
  std::vector<Lineup> out;
  detail::run_lineups(N, d, r, &out);
  return out;
}

/// Number of lineups, without materializing the sequences.
inline std::uint64_t count_lineups(int N, int d, int r) {
  return detail::run_lineups(N, d, r, nullptr);
}

/// A strictly increasing spectrum h realizing the lineup (the r lowest
/// configuration energies appear exactly in lineup order), or nullopt.
inline std::optional<std::vector<Rat>> find_realizing_field(const Lineup& l) {
  if (l.sequence.empty()) throw PreconditionError("empty lineup");
  const int N = l.sequence.front().particle_count();
  const int d = l.sequence.front().orbital_count();
  detail::LineupSearch s;
  s.N = N;
  s.d = d;
  s.r = l.r();
  s.max_parts = N;
  s.max_value = d - 1;
  std::vector<detail::Partition> seq;
  std::set<detail::Partition> ideal;
  for (const auto& c : l.sequence) {
    if (c.particle_count() != N || c.orbital_count() != d)
      throw DimensionError("lineup members must share (N, d)");
    seq.push_back(detail::to_partition(c));
    ideal.insert(seq.back());
  }
  const auto ext = detail::minimal_externals(ideal, N, d - 1);
  const auto sys = s.rows(seq, ext);
  std::vector<Rat> g;
  if (!StrictConeOracle::feasible(sys, d - 1, &g)) return std::nullopt;
  std::vector<Rat> h(d, Rat(0));
  for (int i = 1; i < d; ++i) h[i] = h[i - 1] + g[i - 1];
  return h;
}

}  // namespace bosepoly
