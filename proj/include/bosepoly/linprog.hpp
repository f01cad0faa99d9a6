#pragma once

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

#include "bosepoly/rational.hpp"

namespace bosepoly {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective = 0;
  std::vector<Rat> x;  // primal solution over the declared variables
};

enum class Rel { Le, Ge, Eq };

/// Dense exact-rational LP in the form
///   maximize c.x  subject to  A x (<=,=,>=) b,  x >= 0,
/// solved by a two-phase tableau simplex with Bland's rule (no cycling).
/// Sizes here are tiny (tens of rows/columns), so the dense tableau is fine.
class ExactLp {
 public:
  explicit ExactLp(int num_vars) : n_(num_vars) {}

  void add_row(std::vector<Rat> a, Rel rel, Rat b) {
    assert(static_cast<int>(a.size()) == n_);
    rows_.push_back(std::move(a));
    rels_.push_back(rel);
    rhs_.push_back(std::move(b));
  }

  LpResult maximize(const std::vector<Rat>& c) { return solve(&c); }
  LpResult feasible() { return solve(nullptr); }

 private:
  int n_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rel> rels_;
  std::vector<Rat> rhs_;

  // Tableau layout: columns [0, n_) user vars, then slacks/surplus, then
  // artificials, last column rhs. basis_[i] = column basic in row i.
  std::vector<std::vector<Rat>> t_;
  std::vector<int> basis_;
  std::vector<char> blocked_;  // columns excluded from pricing (artificials)
  int cols_ = 0;

  void pivot(int row, int col) {
    auto& pr = t_[row];
    const Rat piv = pr[col];
    for (auto& x : pr) x /= piv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const Rat f = t_[i][col];
      if (f == 0) continue;
      auto& ri = t_[i];
      for (int j = 0; j <= cols_; ++j)
        if (pr[j] != 0) ri[j] -= f * pr[j];
    }
    basis_[row] = col;
  }

  // Runs simplex on the current tableau with objective in the last row
  // (stored as maximize: last row holds -z coefficients). Bland's rule.
  LpStatus run() {
    const int m = static_cast<int>(basis_.size());
    auto& obj = t_[m];
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (blocked_[j]) continue;
        if (obj[j] < 0) { enter = j; break; }  // smallest index, Bland
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  LpResult solve(const std::vector<Rat>* c) {
    const int m = static_cast<int>(rows_.size());
    // Count extra columns: slack/surplus for Le/Ge rows, artificials where
    // needed (Ge and Eq rows, and Le rows with negative rhs after flip).
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    int extra = 0;
    std::vector<std::vector<Rat>> a = rows_;
    std::vector<Rat> b = rhs_;
    std::vector<Rel> rel = rels_;
    for (int i = 0; i < m; ++i) {
      if (b[i] < 0) {  // flip row so rhs >= 0
        for (auto& x : a[i]) x = -x;
        b[i] = -b[i];
        rel[i] = rel[i] == Rel::Le ? Rel::Ge : (rel[i] == Rel::Ge ? Rel::Le : Rel::Eq);
      }
    }
    for (int i = 0; i < m; ++i)
      if (rel[i] != Rel::Eq) slack_col[i] = n_ + extra++;
    int art_count = 0;
    for (int i = 0; i < m; ++i)
      if (rel[i] != Rel::Le) { art_col[i] = n_ + extra++; ++art_count; }
    cols_ = n_ + extra;

    t_.assign(m + 1, std::vector<Rat>(cols_ + 1, Rat(0)));
    basis_.assign(m, -1);
    blocked_.assign(cols_ + 1, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n_; ++j) t_[i][j] = a[i][j];
      t_[i][cols_] = b[i];
      if (slack_col[i] >= 0) t_[i][slack_col[i]] = rel[i] == Rel::Le ? 1 : -1;
      if (art_col[i] >= 0) {
        t_[i][art_col[i]] = 1;
        basis_[i] = art_col[i];
      } else {
        basis_[i] = slack_col[i];
      }
    }

    // Phase 1: minimize sum of artificials (as maximize of the negation).
    if (art_count > 0) {
      auto& obj = t_[m];
      std::fill(obj.begin(), obj.end(), Rat(0));
      for (int i = 0; i < m; ++i) {
        if (art_col[i] < 0) continue;
        for (int j = 0; j <= cols_; ++j) obj[j] -= t_[i][j];
      }
      for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0) obj[art_col[i]] = 0;
      run();
      if (t_[m][cols_] < 0) return {LpStatus::Infeasible, 0, {}};
      // Pivot leftover zero-level artificials out of the basis.
      for (int i = 0; i < m; ++i) {
        if (art_col[i] < 0 || basis_[i] != art_col[i]) continue;
        int col = -1;
        for (int j = 0; j < n_ + extra - art_count; ++j)
          if (t_[i][j] != 0) { col = j; break; }
        if (col >= 0) pivot(i, col);
        // else: redundant row, harmless to leave (stays at level 0).
      }
      for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0) blocked_[art_col[i]] = 1;
    }

    if (c == nullptr) {
      LpResult res{LpStatus::Optimal, 0, extract()};
      return res;
    }

    // Phase 2 objective row: -c over basic representation.
    auto& obj = t_[m];
    std::fill(obj.begin(), obj.end(), Rat(0));
    for (int j = 0; j < n_; ++j) obj[j] = -(*c)[j];
    for (int i = 0; i < m; ++i) {
      const int bc = basis_[i];
      if (bc < n_ && (*c)[bc] != 0) {
        const Rat f = (*c)[bc];
        for (int j = 0; j <= cols_; ++j)
          if (t_[i][j] != 0) obj[j] += f * t_[i][j];
      }
    }
    for (int i = 0; i < m; ++i) obj[basis_[i]] = 0;
    const LpStatus st = run();
    if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, 0, {}};
    LpResult res{LpStatus::Optimal, t_[m][cols_], extract()};
    return res;
  }

  std::vector<Rat> extract() const {
    std::vector<Rat> x(n_, Rat(0));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] >= 0 && basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
    return x;
  }
};

namespace detail {

// Floating-point phase-1 simplex for systems  C g >= 1, g >= 0  posed as
//   minimize t  s.t.  C g + t 1 >= 1, g >= 0, t >= 0.
// Used only as a screening pass; every verdict is confirmed exactly by the
// caller. Returns the witness g and the phase-1 row multipliers.
struct FloatFeasibility {
  bool solved = false;        // simplex finished within the iteration cap
  double violation = 1.0;     // optimal t (0 => feasible)
  std::vector<double> g;
  std::vector<double> row_dual;
};

inline FloatFeasibility float_strict_feasibility(
    const std::vector<std::vector<long>>& c_rows, int n) {
  const int m = static_cast<int>(c_rows.size());
  // Tableau columns: g (n), t (1), surplus (m), artificial (m), rhs.
  const int tcol = n;
  const int s0 = n + 1;
  const int a0 = s0 + m;
  const int cols = a0 + m;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols + 1, 0.0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = static_cast<double>(c_rows[i][j]);
    t[i][tcol] = 1.0;
    t[i][s0 + i] = -1.0;
    t[i][a0 + i] = 1.0;
    t[i][cols] = 1.0;
    basis[i] = a0 + i;
  }
  // Phase-1 objective: maximize -(sum of artificials) - and afterwards
  // minimize t within feasibility; combine as lexicographic two stage.
  auto& obj = t[m];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= cols; ++j) obj[j] -= t[i][j];
  for (int i = 0; i < m; ++i) obj[a0 + i] = 0.0;

  const double eps = 1e-9;
  auto pivot = [&](int row, int col) {
    const double piv = t[row][col];
    for (int j = 0; j <= cols; ++j) t[row][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == row) continue;
      const double f = t[i][col];
      if (std::fabs(f) < 1e-14) continue;
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  };
  auto run = [&](int limit) -> bool {
    for (int iter = 0; iter < limit; ++iter) {
      int enter = -1;
      double best = -eps;
      for (int j = 0; j < cols; ++j)
        if (t[m][j] < best) { best = t[m][j]; enter = j; }
      if (enter < 0) return true;
      int leave = -1;
      double ratio = 0;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] <= eps) continue;
        const double r = t[i][cols] / t[i][enter];
        if (leave < 0 || r < ratio - 1e-12) { leave = i; ratio = r; }
      }
      if (leave < 0) return false;  // unbounded (should not happen here)
      pivot(leave, enter);
    }
    return false;
  };

  FloatFeasibility out;
  if (!run(400)) return out;
  if (t[m][cols] < -1e-7) return out;  // artificials stuck; treat as unsolved

  // Stage 2: minimize t among feasible points.
  for (int j = 0; j <= cols; ++j) obj[j] = 0.0;
  obj[tcol] = 1.0;  // maximize -t
  for (int i = 0; i < m; ++i) {
    if (basis[i] == tcol) {
      for (int j = 0; j <= cols; ++j) obj[j] -= t[i][j];
      obj[tcol] = 0.0;
    }
  }
  for (int i = 0; i < m; ++i)
    if (basis[i] < a0) obj[basis[i]] = 0.0;
  for (int i = 0; i < m; ++i) obj[a0 + i] = 1e6;  // keep artificials out
  if (!run(400)) return out;

  out.solved = true;
  std::vector<double> x(cols, 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < cols) x[basis[i]] = t[i][cols];
  out.violation = x[tcol];
  out.g.assign(x.begin(), x.begin() + n);
  // Row multipliers from the reduced costs of the surplus columns.
  out.row_dual.assign(m, 0.0);
  for (int i = 0; i < m; ++i) out.row_dual[i] = std::fabs(t[m][s0 + i]);
  return out;
}

}  // namespace detail

/// Decides, exactly, whether the open cone { g : row.g > 0 for every row }
/// is nonempty. Rows are integer vectors. A floating-point screening pass
/// proposes a verdict; the verdict is always confirmed in exact arithmetic
/// (witness substitution, a small Farkas certificate LP, or a full exact LP).
class StrictConeOracle {
 public:
  /// rows: integer coefficient vectors, all of length n.
  static bool feasible(const std::vector<std::vector<long>>& rows, int n,
                       std::vector<Rat>* witness = nullptr) {
    if (rows.empty()) {
      if (witness) witness->assign(n, Rat(1));
      return true;
    }
    auto fl = detail::float_strict_feasibility(rows, n);
    if (fl.solved && fl.violation < 1e-7) {
      if (confirm_witness(rows, fl.g, witness)) return true;
    }
    if (fl.solved && fl.violation > 1e-7) {
      auto support = dual_support(fl.row_dual);
      if (!support.empty() && support.size() <= static_cast<std::size_t>(n + 3) &&
          certify_infeasible(rows, support, n))
        return false;
    }
    return exact_decide(rows, n, witness);
  }

 private:
  static bool confirm_witness(const std::vector<std::vector<long>>& rows,
                              const std::vector<double>& g,
                              std::vector<Rat>* witness) {
    std::vector<Rat> gq(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double scaled = std::round(g[i] * 1048576.0);
      gq[i] = Rat(static_cast<long>(scaled), 1048576L);
      gq[i].canonicalize();
    }
    for (const auto& row : rows) {
      Rat dot = 0;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) dot += Rat(row[j]) * gq[j];
      if (dot <= 0) return false;
    }
    if (witness) *witness = std::move(gq);
    return true;
  }

  static std::vector<int> dual_support(const std::vector<double>& dual) {
    std::vector<int> s;
    for (std::size_t i = 0; i < dual.size(); ++i)
      if (dual[i] > 1e-7) s.push_back(static_cast<int>(i));
    return s;
  }

  // Farkas: { C g >= 1, g >= 0 } is infeasible iff some y >= 0 with
  // C^T y <= 0 and sum(y) > 0 exists. Restricting y to the float support
  // keeps this certificate LP tiny.
  static bool certify_infeasible(const std::vector<std::vector<long>>& rows,
                                 const std::vector<int>& support, int n) {
    const int k = static_cast<int>(support.size());
    ExactLp lp(k);
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> a(k);
      bool nonzero = false;
      for (int i = 0; i < k; ++i) {
        a[i] = Rat(rows[support[i]][j]);
        nonzero = nonzero || rows[support[i]][j] != 0;
      }
      if (nonzero) lp.add_row(std::move(a), Rel::Le, Rat(0));
    }
    lp.add_row(std::vector<Rat>(k, Rat(1)), Rel::Le, Rat(1));
    auto res = lp.maximize(std::vector<Rat>(k, Rat(1)));
    return res.status == LpStatus::Optimal && res.objective > 0;
  }

  static bool exact_decide(const std::vector<std::vector<long>>& rows, int n,
                           std::vector<Rat>* witness) {
    ExactLp lp(n);
    for (const auto& row : rows) {
      std::vector<Rat> a(n);
      for (int j = 0; j < n; ++j) a[j] = Rat(row[j]);
      lp.add_row(std::move(a), Rel::Ge, Rat(1));
    }
    auto res = lp.feasible();
    if (res.status != LpStatus::Optimal) return false;
    if (witness) *witness = res.x;
    return true;
  }
};

}  // namespace bosepoly
