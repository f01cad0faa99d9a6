#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bosepoly/rational.hpp"

namespace bosepoly {

/// Halfspace normal.x <= offset.
struct Facet {
  std::vector<Rat> normal;
  Rat offset;
};

namespace detail {

using Zset = std::vector<std::uint64_t>;

inline void zset_add(Zset& z, int bit) { z[bit >> 6] |= (1ULL << (bit & 63)); }
inline Zset zset_and(const Zset& a, const Zset& b) {
  Zset out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}
inline bool zset_subset(const Zset& a, const Zset& b) {  // a ⊆ b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline void make_primitive(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) x /= g;
}

inline mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// Exact inverse via Gauss-Jordan; returns false when singular.
inline bool invert(std::vector<std::vector<Rat>> a, std::vector<std::vector<Rat>>& inv) {
  const int n = static_cast<int>(a.size());
  inv.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) return false;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rat p = a[col][col];
    for (int j = 0; j < n; ++j) { a[col][j] /= p; inv[col][j] /= p; }
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return true;
}

}  // namespace detail

/// Facet enumeration of conv(points) + cone(rays) by the double description
/// method run on the polar cone, all in exact arithmetic. The polyhedron
/// must be full-dimensional. Returned facets carry primitive integer data.
inline std::vector<Facet> facet_enumeration(
    const std::vector<std::vector<Rat>>& points,
    const std::vector<std::vector<Rat>>& rays) {
  if (points.empty()) throw PreconditionError("need at least one point");
  const int n = static_cast<int>(points.front().size());
  const int D = n + 1;

  // Homogenize generators into integer rows (L, L*p) and (0, r); the polar
  // cone is { y : row . y <= 0 }.
  std::vector<std::vector<mpz_class>> rows;
  auto push_row = [&](const Rat& lead, const std::vector<Rat>& v) {
    mpz_class l = lead.get_den();
    for (const auto& x : v)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> row(D);
    row[0] = mpz_class(lead.get_num() * (l / lead.get_den()));
    for (int i = 0; i < n; ++i)
      row[i + 1] = mpz_class(v[i].get_num() * (l / v[i].get_den()));
    detail::make_primitive(row);
    if (std::find(rows.begin(), rows.end(), row) == rows.end())
      rows.push_back(std::move(row));
  };
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw DimensionError("ragged point set");
    push_row(Rat(1), p);
  }
  for (const auto& r : rays) {
    if (static_cast<int>(r.size()) != n) throw DimensionError("ragged ray set");
    push_row(Rat(0), r);
  }
  const int m = static_cast<int>(rows.size());

  // Initial simplicial cone from D independent rows.
  std::vector<int> basis;
  {
    std::vector<std::vector<Rat>> reduced;
    for (int i = 0; i < m && static_cast<int>(basis.size()) < D; ++i) {
      std::vector<Rat> v(D);
      for (int j = 0; j < D; ++j) v[j] = Rat(rows[i][j]);
      for (const auto& b : reduced) {
        int lead = 0;
        while (lead < D && b[lead] == 0) ++lead;
        if (lead < D && v[lead] != 0) {
          const Rat f = v[lead] / b[lead];
          for (int j = 0; j < D; ++j) v[j] -= f * b[j];
        }
      }
      bool zero = true;
      for (const auto& x : v) if (x != 0) { zero = false; break; }
      if (!zero) {
        reduced.push_back(std::move(v));
        basis.push_back(i);
      }
    }
  }
  if (static_cast<int>(basis.size()) < D)
    throw PreconditionError("facet enumeration requires a full-dimensional input");

  std::vector<std::vector<Rat>> B(D, std::vector<Rat>(D));
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) B[i][j] = Rat(rows[basis[i]][j]);
  std::vector<std::vector<Rat>> Binv;
  if (!detail::invert(std::move(B), Binv))
    throw std::logic_error("independent rows must be invertible");

  const int words = (m + 63) / 64;
  struct Ray {
    std::vector<mpz_class> y;
    detail::Zset zero;
  };
  std::vector<Ray> cur;
  for (int j = 0; j < D; ++j) {
    // Column j of -B^{-1}, scaled primitive integer.
    std::vector<Rat> col(D);
    mpz_class l = 1;
    for (int i = 0; i < D; ++i) {
      col[i] = -Binv[i][j];
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), col[i].get_den().get_mpz_t());
    }
    Ray r;
    r.y.resize(D);
    for (int i = 0; i < D; ++i)
      r.y[i] = mpz_class(col[i].get_num() * (l / col[i].get_den()));
    detail::make_primitive(r.y);
    r.zero.assign(words, 0);
    for (int i = 0; i < D; ++i)
      if (i != j) detail::zset_add(r.zero, basis[i]);
    cur.push_back(std::move(r));
  }

  std::vector<char> processed(m, 0);
  for (int i : basis) processed[i] = 1;

  for (int ci = 0; ci < m; ++ci) {
    if (processed[ci]) continue;
    std::vector<mpz_class> vals(cur.size());
    bool any_pos = false;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      vals[k] = detail::dot(rows[ci], cur[k].y);
      if (vals[k] > 0) any_pos = true;
    }
    if (!any_pos) {
      for (std::size_t k = 0; k < cur.size(); ++k)
        if (vals[k] == 0) detail::zset_add(cur[k].zero, ci);
      processed[ci] = 1;
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      if (vals[k] > 0) continue;
      Ray r = cur[k];
      if (vals[k] == 0) detail::zset_add(r.zero, ci);
      next.push_back(std::move(r));
    }
    for (std::size_t a = 0; a < cur.size(); ++a) {
      if (vals[a] <= 0) continue;
      for (std::size_t b = 0; b < cur.size(); ++b) {
        if (vals[b] >= 0) continue;
        const auto common = detail::zset_and(cur[a].zero, cur[b].zero);
        bool adjacent = true;
        for (std::size_t k = 0; k < cur.size(); ++k) {
          if (k == a || k == b) continue;
          if (detail::zset_subset(common, cur[k].zero)) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        Ray w;
        w.y.resize(D);
        for (int i = 0; i < D; ++i)
          w.y[i] = vals[a] * cur[b].y[i] - vals[b] * cur[a].y[i];
        detail::make_primitive(w.y);
        w.zero = common;
        detail::zset_add(w.zero, ci);
        next.push_back(std::move(w));
      }
    }
    cur = std::move(next);
    processed[ci] = 1;
  }

  std::vector<Facet> facets;
  for (const auto& r : cur) {
    bool normal_zero = true;
    for (int i = 1; i < D; ++i)
      if (r.y[i] != 0) { normal_zero = false; break; }
    if (normal_zero) continue;  // the trivial valid inequality 0.x <= b
    Facet f;
    f.normal.resize(n);
    for (int i = 0; i < n; ++i) f.normal[i] = Rat(r.y[i + 1]);
    f.offset = Rat(-r.y[0]);
    facets.push_back(std::move(f));
  }
  return facets;
}

/// Extreme points of a 2D point set, counterclockwise (monotone chain).
inline std::vector<std::vector<Rat>> convex_hull_2d(
    std::vector<std::vector<Rat>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto cross = [](const std::vector<Rat>& o, const std::vector<Rat>& a,
                  const std::vector<Rat>& b) -> Rat {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::vector<Rat>> hull;
  for (const auto& p : pts) {  // lower
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  return hull;
}

/// Vertices of { x in R^2 : a.x <= b for every (a, b) }, ordered CCW.
inline std::vector<std::vector<Rat>> polygon_from_halfspaces(
    const std::vector<Facet>& halfspaces) {
  std::vector<std::vector<Rat>> pts;
  const int m = static_cast<int>(halfspaces.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& a = halfspaces[i];
      const auto& b = halfspaces[j];
      const Rat det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
      if (det == 0) continue;
      std::vector<Rat> x{(a.offset * b.normal[1] - b.offset * a.normal[1]) / det,
                         (a.normal[0] * b.offset - b.normal[0] * a.offset) / det};
      bool ok = true;
      for (const auto& h : halfspaces)
        if (h.normal[0] * x[0] + h.normal[1] * x[1] > h.offset) { ok = false; break; }
      if (ok) pts.push_back(std::move(x));
    }
  return convex_hull_2d(std::move(pts));
}

}  // namespace bosepoly
