#pragma once

#include <algorithm>
#include <vector>

#include "bosepoly/dd.hpp"
#include "bosepoly/linprog.hpp"
#include "bosepoly/polytope.hpp"
#include "bosepoly/rational.hpp"

namespace bosepoly {

/// One exclusion constraint coeffs . lambda_sorted_desc <= bound.
struct ExclusionInequality {
  std::vector<Rat> coeffs;
  Rat bound;
};

/// Minimal hyperplane description of the occupation-spectrum polytope:
/// the exclusion inequalities on the decreasingly sorted spectrum plus the
/// normalization equality sum(lambda) = N. Sorting and nonnegativity of the
/// spectrum are ambient assumptions, not counted constraints; the reported
/// count follows the convention {inequalities} + {normalization as one}.
struct HalfspaceSystem {
  int N = 0;
  int d = 0;
  std::vector<ExclusionInequality> inequalities;
  int constraint_count() const {
    return static_cast<int>(inequalities.size()) + 1;
  }
};

/// Inequality with the bound kept as an affine form in N and the weights:
/// bound = constant + n_coeff * N + sum_j w_coeffs[j] * w_j. Used to state
/// the r -> r+1 hierarchy exactly.
struct SymbolicInequality {
  std::vector<Rat> coeffs;    // on lambda sorted desc, length r
  Rat constant;
  Rat n_coeff;
  std::vector<Rat> w_coeffs;  // length r
};

/// Closed-form minimal systems for r <= 3.
inline std::vector<SymbolicInequality> analytic_halfspaces_symbolic(int r) {
  if (r < 1 || r > 3) throw SizeError("analytic systems cover r <= 3 only");
  std::vector<SymbolicInequality> out;
  if (r >= 2) {
    // lambda_1 <= N - 1 + w_1
    SymbolicInequality s;
    s.coeffs.assign(r, Rat(0));
    s.coeffs[0] = 1;
    s.constant = -1;
    s.n_coeff = 1;
    s.w_coeffs.assign(r, Rat(0));
    s.w_coeffs[0] = 1;
    out.push_back(std::move(s));
  }
  if (r >= 3) {
    // 2 lambda_1 + lambda_2 <= 2(N-1) + 2 w_1 + w_2
    SymbolicInequality s;
    s.coeffs.assign(r, Rat(0));
    s.coeffs[0] = 2;
    s.coeffs[1] = 1;
    s.constant = -2;
    s.n_coeff = 2;
    s.w_coeffs.assign(r, Rat(0));
    s.w_coeffs[0] = 2;
    s.w_coeffs[1] = 1;
    out.push_back(std::move(s));
  }
  return out;
}

inline HalfspaceSystem analytic_halfspaces(int N, const WeightVector& w, int d) {
  const int r = w.r();
  if (r > 3) throw SizeError("analytic path supports r <= 3; use the numeric path");
  if (N < r - 1 || d < r) throw SizeError("need N >= r-1 and d >= r");
  HalfspaceSystem sys;
  sys.N = N;
  sys.d = d;
  for (const auto& s : analytic_halfspaces_symbolic(r)) {
    ExclusionInequality ineq;
    ineq.coeffs.assign(d, Rat(0));
    for (int i = 0; i < r; ++i) ineq.coeffs[i] = s.coeffs[i];
    ineq.bound = s.constant + s.n_coeff * N;
    for (int j = 0; j < r; ++j) ineq.bound += s.w_coeffs[j] * w[j];
    sys.inequalities.push_back(std::move(ineq));
  }
  return sys;
}

/// True iff the sorted spectrum satisfies every exclusion inequality, the
/// normalization equality, and the ambient nonnegativity.
inline bool check_system(const HalfspaceSystem& sys, const Spectrum& lambda) {
  if (lambda.dimension() != sys.d)
    throw DimensionError("spectrum dimension must equal the system dimension");
  const auto s = lambda.sorted();
  if (vec_sum(s) != Rat(sys.N)) return false;
  if (s.back() < 0) return false;
  for (const auto& ineq : sys.inequalities) {
    Rat lhs = 0;
    for (int i = 0; i < sys.d; ++i)
      if (ineq.coeffs[i] != 0) lhs += ineq.coeffs[i] * s[i];
    if (lhs > ineq.bound) return false;
  }
  return true;
}

namespace detail {

// Chamber and positivity constraints of the sorted sector, as halfspaces on
// lambda sorted desc (a . lambda <= b form).
inline std::vector<Facet> sorted_sector_ambient(int d) {
  std::vector<Facet> out;
  for (int i = 0; i + 1 < d; ++i) {
    Facet f;
    f.normal.assign(d, Rat(0));
    f.normal[i] = -1;
    f.normal[i + 1] = 1;  // lambda_{i+1} - lambda_i <= 0
    f.offset = 0;
    out.push_back(std::move(f));
  }
  Facet pos;
  pos.normal.assign(d, Rat(0));
  pos.normal[d - 1] = -1;  // -lambda_d <= 0
  pos.offset = 0;
  out.push_back(std::move(pos));
  return out;
}

// Whether c.lambda <= bound holds throughout { halfspaces, sum = N } with
// lambda free (split into differences, so no sign assumption leaks in).
// An unbounded objective means the inequality is certainly not implied.
inline bool implied_by(const std::vector<Facet>& halfspaces,
                       const std::vector<Rat>& c, const Rat& bound, int d, int N) {
  ExactLp lp(2 * d);
  auto split = [d](const std::vector<Rat>& a) {
    std::vector<Rat> row(2 * d);
    for (int i = 0; i < d; ++i) {
      row[i] = a[i];
      row[d + i] = -a[i];
    }
    return row;
  };
  for (const auto& h : halfspaces) lp.add_row(split(h.normal), Rel::Le, h.offset);
  lp.add_row(split(std::vector<Rat>(d, Rat(1))), Rel::Eq, Rat(N));
  const auto res = lp.maximize(split(c));
  if (res.status == LpStatus::Unbounded) return false;
  if (res.status != LpStatus::Optimal)
    throw std::logic_error("sector program cannot be infeasible");
  return res.objective <= bound;
}

// Drops every halfspace implied by the others plus normalization. The
// minimal representation of a full-dimensional polytope is unique, so the
// scan order does not matter.
inline std::vector<Facet> prune_redundant(std::vector<Facet> hs, int d, int N) {
  for (std::size_t i = 0; i < hs.size();) {
    std::vector<Facet> rest;
    for (std::size_t j = 0; j < hs.size(); ++j)
      if (j != i) rest.push_back(hs[j]);
    if (implied_by(rest, hs[i].normal, hs[i].offset, d, N))
      hs.erase(hs.begin() + i);
    else
      ++i;
  }
  return hs;
}

}  // namespace detail

/// Facets of the dominance region in partial-sum coordinates, translated to
/// exclusion inequalities on the sorted spectrum. Exact, via the double
/// description method over the sorted vertices; the ordering facets and
/// plain positivity are discarded, and inequalities implied by the ambient
/// sorted sector are pruned away.
inline HalfspaceSystem numeric_facets(const SpectralPolytope& p,
                                      bool allow_large = false) {
  const int d = p.dimension();
  const int N = p.particle_count();
  const int r = p.weights().r();
  if (!p.weights().generic())
    throw DegeneracyError("numeric facets need strictly decreasing positive weights");
  if (d < r) throw SizeError("need d >= r");
  if (r > 5 && !allow_large)
    throw SizeError("numeric facets capped at r <= 5 (pass allow_large to lift)");

  HalfspaceSystem sys;
  sys.N = N;
  sys.d = d;
  if (d == 1) return sys;  // single point; normalization only

  // Partial-sum images of the sorted vertices.
  std::vector<std::vector<Rat>> points;
  for (const auto& ps : p.sorted_vertex_prefix_sums())
    points.emplace_back(ps.begin(), ps.end() - 1);  // drop the fixed total
  std::vector<std::vector<Rat>> rays;
  for (int k = 0; k + 1 < d; ++k) {
    std::vector<Rat> e(d - 1, Rat(0));
    e[k] = -1;
    rays.push_back(std::move(e));
  }

  std::vector<Facet> kept;
  for (auto& f : facet_enumeration(points, rays)) {
    for (const auto& a : f.normal)
      if (a < 0) throw std::logic_error("dominance facets must have a >= 0");
    // t_{d-1} <= N is the positivity constraint lambda_d >= 0: ambient.
    bool last_only = f.normal[d - 2] > 0;
    for (int k = 0; k + 2 < d; ++k)
      if (f.normal[k] != 0) last_only = false;
    if (last_only && f.offset == f.normal[d - 2] * N) continue;
    // Suffix sums convert partial-sum coefficients to spectrum coefficients.
    Facet g;
    g.normal.assign(d, Rat(0));
    Rat suffix = 0;
    for (int i = d - 2; i >= 0; --i) {
      suffix += f.normal[i];
      g.normal[i] = suffix;
    }
    g.offset = f.offset;
    kept.push_back(std::move(g));
  }

  // Prune relative to the ambient sorted sector.
  auto ambient = detail::sorted_sector_ambient(d);
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Facet> rest = ambient;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.push_back(kept[j]);
    if (detail::implied_by(rest, kept[i].normal, kept[i].offset, d, N))
      kept.erase(kept.begin() + i);
    else
      ++i;
  }

  std::sort(kept.begin(), kept.end(), [](const Facet& a, const Facet& b) {
    return a.normal < b.normal;
  });
  for (auto& f : kept)
    sys.inequalities.push_back(ExclusionInequality{std::move(f.normal), f.offset});
  return sys;
}

/// Full facet list of the sorted sector of the polytope (exclusion plus the
/// surviving chamber/positivity facets), for boundary extraction.
inline std::vector<Facet> sorted_sector_facets(const SpectralPolytope& p) {
  const int d = p.dimension();
  auto sys = numeric_facets(p);
  std::vector<Facet> all = detail::sorted_sector_ambient(d);
  for (const auto& ineq : sys.inequalities)
    all.push_back(Facet{ineq.coeffs, ineq.bound});
  return detail::prune_redundant(std::move(all), d, p.particle_count());
}

}  // namespace bosepoly
