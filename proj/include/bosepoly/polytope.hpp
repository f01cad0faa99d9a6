#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bosepoly/lineups.hpp"
#include "bosepoly/linprog.hpp"
#include "bosepoly/rational.hpp"

namespace bosepoly {

/// Decreasing, normalized ensemble spectrum w; r counts the nonzero weights.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rat> w) : w_(std::move(w)) {
    if (w_.empty()) throw NormalizationError("weight vector is empty");
    Rat sum = 0;
    for (std::size_t j = 0; j < w_.size(); ++j) {
      if (w_[j] < 0) throw NormalizationError("weights must be nonnegative");
      if (j > 0 && w_[j] > w_[j - 1])
        throw NormalizationError("weights must be decreasing");
      sum += w_[j];
    }
    if (sum != 1) throw NormalizationError("weights must sum to 1");
    r_ = 0;
    while (r_ < static_cast<int>(w_.size()) && w_[r_] > 0) ++r_;
  }

  int r() const { return r_; }
  int size() const { return static_cast<int>(w_.size()); }
  const Rat& operator[](int j) const { return w_[j]; }
  const std::vector<Rat>& values() const { return w_; }

  /// Strictly decreasing positive weights (no ties, no zeros beyond r).
  bool generic() const {
    for (int j = 1; j < r_; ++j)
      if (w_[j] == w_[j - 1]) return false;
    return r_ >= 1;
  }

  bool operator==(const WeightVector& o) const { return w_ == o.w_; }

  /// this ≺ other: all partial sums bounded, totals equal (both are 1).
  bool majorized_by(const WeightVector& other) const {
    const std::size_t n = std::max(w_.size(), other.w_.size());
    Rat sa = 0, sb = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k < w_.size()) sa += w_[k];
      if (k < other.w_.size()) sb += other.w_[k];
      if (sa > sb) return false;
    }
    return true;
  }

 private:
  std::vector<Rat> w_;
  int r_;
};

/// Candidate natural occupation numbers, held exactly.
class Spectrum {
 public:
  explicit Spectrum(std::vector<Rat> values) : values_(std::move(values)) {
    if (values_.empty()) throw DimensionError("empty spectrum");
  }

  /// Rationalizes floating values and rescales exactly to the expected sum.
  /// The raw sum must already match to within `tol`.
  static Spectrum from_doubles(const std::vector<double>& v, const Rat& expected_sum,
                               double tol = 1e-9,
                               unsigned long long max_den = 1000000000000ULL) {
    std::vector<Rat> q(v.size());
    Rat sum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      q[i] = rationalize(v[i], max_den);
      sum += q[i];
    }
    const Rat deviation = abs(sum - expected_sum);
    if (deviation.get_d() > tol)
      throw NormalizationError("spectrum sum deviates from expected value");
    if (sum != expected_sum) {
      if (sum == 0) throw NormalizationError("cannot rescale zero spectrum");
      const Rat scale = expected_sum / sum;
      for (auto& x : q) x *= scale;
    }
    return Spectrum(std::move(q));
  }

  int dimension() const { return static_cast<int>(values_.size()); }
  const std::vector<Rat>& values() const { return values_; }
  Rat sum() const { return vec_sum(values_); }
  std::vector<Rat> sorted() const { return sorted_desc(values_); }

 private:
  std::vector<Rat> values_;
};

/// a majorizes b, i.e. b ≺ a.
inline bool majorizes(const Spectrum& a, const Spectrum& b) {
  if (a.dimension() != b.dimension())
    throw DimensionError("spectra must have equal dimension");
  if (a.sum() != b.sum())
    throw NormalizationError("spectra must have equal sums");
  const auto pa = prefix_sums(a.sorted());
  const auto pb = prefix_sums(b.sorted());
  for (std::size_t k = 0; k + 1 < pa.size(); ++k)
    if (pb[k] > pa[k]) return false;
  return true;
}

struct Vertex {
  std::vector<Rat> coords;  // sum_j w_j * occupation(i_j), in orbital order
  int lineup_id = -1;
};

struct MembershipResult {
  bool member = false;
  bool boundary = false;
  Rat slack = 0;  // optimal min-slack of the majorization program
};

/// Vertex representation of the occupation-spectrum polytope for (N, d, w),
/// together with the generating lineups. Immutable; safe to share across
/// threads.
class SpectralPolytope {
 public:
  SpectralPolytope(int N, int d, WeightVector w, std::vector<Lineup> lineups,
                   std::vector<Vertex> vertices)
      : N_(N), d_(d), w_(std::move(w)), lineups_(std::move(lineups)),
        vertices_(std::move(vertices)) {
    for (const auto& v : vertices_)
      sorted_prefix_.push_back(prefix_sums(sorted_desc(v.coords)));
  }

  int particle_count() const { return N_; }
  int dimension() const { return d_; }
  const WeightVector& weights() const { return w_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Lineup>& lineups() const { return lineups_; }

  /// Top-k partial sums of each vertex sorted decreasingly (k = 1..d).
  const std::vector<std::vector<Rat>>& sorted_vertex_prefix_sums() const {
    return sorted_prefix_;
  }

 private:
  int N_, d_;
  WeightVector w_;
  std::vector<Lineup> lineups_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Rat>> sorted_prefix_;
};

/// One vertex per lineup, computed exactly; coinciding vertices (possible
/// for degenerate w) are merged, keeping the first generating lineup.
inline SpectralPolytope build_vertices(int N, int d, const WeightVector& w) {
  const int r = w.r();
  if (N < r - 1 || d < r)
    throw SizeError("need N >= r-1 and d >= r");
  auto lineups = enumerate_lineups(N, d, r);
  std::vector<Vertex> vertices;
  for (std::size_t l = 0; l < lineups.size(); ++l) {
    Vertex v;
    v.lineup_id = static_cast<int>(l);
    v.coords.assign(d, Rat(0));
    for (int j = 0; j < r; ++j) {
      const auto occ = lineups[l].sequence[j].occupation_vector();
      for (int i = 0; i < d; ++i)
        if (occ[i] != 0) v.coords[i] += w[j] * occ[i];
    }
    bool dup = false;
    for (const auto& u : vertices)
      if (u.coords == v.coords) { dup = true; break; }
    if (!dup) vertices.push_back(std::move(v));
  }
  return SpectralPolytope(N, d, w, std::move(lineups), std::move(vertices));
}

/// Membership test via the majorization feasibility program: λ lies in the
/// polytope iff some convex combination of the decreasingly sorted vertices
/// majorizes λ. Solved exactly; `boundary` flags |slack| < 1e-10.
inline MembershipResult contains(const SpectralPolytope& p, const Spectrum& lambda) {
  const int d = p.dimension();
  if (lambda.dimension() != d)
    throw NormalizationError("spectrum dimension must equal d");
  if (lambda.sum() != Rat(p.particle_count()))
    throw NormalizationError("spectrum must sum to N");
  static const Rat kBoundaryEps = Rat(1, 10000000000L);
  if (d == 1) return {true, false, Rat(0)};

  const auto& S = p.sorted_vertex_prefix_sums();
  const int R = static_cast<int>(S.size());
  const auto T = prefix_sums(lambda.sorted());

  // Vars: p_0..p_{R-1}, s+, s-; maximize s = s+ - s-.
  ExactLp lp(R + 2);
  for (int k = 0; k + 1 < d; ++k) {
    std::vector<Rat> row(R + 2);
    for (int l = 0; l < R; ++l) row[l] = S[l][k];
    row[R] = -1;
    row[R + 1] = 1;
    lp.add_row(std::move(row), Rel::Ge, T[k]);
  }
  std::vector<Rat> simplex_row(R + 2, Rat(0));
  for (int l = 0; l < R; ++l) simplex_row[l] = 1;
  lp.add_row(std::move(simplex_row), Rel::Eq, Rat(1));
  std::vector<Rat> obj(R + 2, Rat(0));
  obj[R] = 1;
  obj[R + 1] = -1;
  const auto res = lp.maximize(obj);
  if (res.status != LpStatus::Optimal)
    throw std::logic_error("membership program must be bounded and feasible");
  MembershipResult out;
  out.slack = res.objective;
  out.member = out.slack >= 0;
  out.boundary = abs(out.slack) < kBoundaryEps;
  return out;
}

/// Parallel map over candidate spectra; results are ordered by input index
/// regardless of scheduling.
inline std::vector<MembershipResult> contains_batch(
    const SpectralPolytope& p, const std::vector<Spectrum>& spectra);

/// Shifts every vertex by (N'-N) e_1 (Minkowski relation between particle
/// numbers); the result equals build_vertices(N', d, w) exactly.
inline SpectralPolytope minkowski_lift(const SpectralPolytope& p, int n_prime) {
  const int delta = n_prime - p.particle_count();
  if (delta <= 0) throw SizeError("minkowski_lift needs N' > N");
  std::vector<Vertex> vertices = p.vertices();
  for (auto& v : vertices) v.coords[0] += delta;
  std::vector<Lineup> lineups = p.lineups();
  for (auto& l : lineups)
    for (auto& c : l.sequence) {
      std::vector<int> idx(delta, 1);
      idx.insert(idx.end(), c.indices().begin(), c.indices().end());
      c = Configuration(std::move(idx), p.dimension());
    }
  return SpectralPolytope(n_prime, p.dimension(), p.weights(), std::move(lineups),
                          std::move(vertices));
}

namespace detail {

inline std::vector<std::vector<Rat>> permuted_vertex_points(
    const SpectralPolytope& p) {
  std::vector<std::vector<Rat>> pts;
  const int d = p.dimension();
  std::vector<int> perm(d);
  for (const auto& v : p.vertices()) {
    for (int i = 0; i < d; ++i) perm[i] = i;
    do {
      std::vector<Rat> q(d);
      for (int i = 0; i < d; ++i) q[i] = v.coords[perm[i]];
      if (std::find(pts.begin(), pts.end(), q) == pts.end())
        pts.push_back(std::move(q));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return pts;
}

}  // namespace detail

/// Decides whether mu = lambda + c with lambda in the polytope and c in the
/// rescaled simplex of edge length delta (c >= 0, sum(c) = delta), by exact
/// feasibility over the permuted-vertex hull. Deliberately independent of
/// the majorization route in `contains`. Desk-scale: d <= 6.
inline bool minkowski_decomposable(const SpectralPolytope& p, int delta,
                                   const Spectrum& mu) {
  const int d = p.dimension();
  if (d > 6) throw SizeError("decomposition LP enumerates d! permutations; d <= 6");
  if (mu.dimension() != d) throw NormalizationError("mu dimension must equal d");
  if (delta <= 0) throw SizeError("delta must be positive");
  if (mu.sum() != Rat(p.particle_count() + delta))
    throw NormalizationError("mu must sum to N + delta");
  const auto pts = detail::permuted_vertex_points(p);
  const int P = static_cast<int>(pts.size());
  // Vars: alpha_0..alpha_{P-1}, c_0..c_{d-1}.
  ExactLp lp(P + d);
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> row(P + d, Rat(0));
    for (int t = 0; t < P; ++t) row[t] = pts[t][i];
    row[P + i] = 1;
    lp.add_row(std::move(row), Rel::Eq, mu.values()[i]);
  }
  std::vector<Rat> conv(P + d, Rat(0));
  for (int t = 0; t < P; ++t) conv[t] = 1;
  lp.add_row(std::move(conv), Rel::Eq, Rat(1));
  return lp.feasible().status == LpStatus::Optimal;
}

/// True iff w1 ≺ w2; equivalently (for valid N, d per the size bounds) the
/// polytope of w1 is contained in the polytope of w2.
inline bool domain_inclusion(const WeightVector& w1, const WeightVector& w2,
                             int /*N*/, int /*d*/) {
  return w1.majorized_by(w2);
}

}  // namespace bosepoly

#include "bosepoly/parallel.hpp"

namespace bosepoly {

inline std::vector<MembershipResult> contains_batch(
    const SpectralPolytope& p, const std::vector<Spectrum>& spectra) {
  std::vector<MembershipResult> out(spectra.size());
  parallel_for(spectra.size(), [&](std::size_t i) { out[i] = contains(p, spectra[i]); });
  return out;
}

}  // namespace bosepoly
