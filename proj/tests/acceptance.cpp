// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerances and expected values in code.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <vector>

#include "bosepoly/halfspace.hpp"
#include "bosepoly/lineups.hpp"
#include "bosepoly/oracle.hpp"
#include "bosepoly/parallel.hpp"
#include "bosepoly/polytope.hpp"
#include "testutil.hpp"

using namespace bosepoly;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail,
            double seconds) {
  std::printf("[%s] %d. %s (%s) [%.1fs]\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
              detail.c_str(), seconds);
  if (!ok) ++failures;
}

template <class F>
void criterion(int idx, const std::string& name, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(idx, name, ok, detail, secs);
}

// 1. Vertex counts for r = 1..12 at N = r-1 and N = r, d = r, < 60 s.
bool vertex_counts(std::string& detail) {
  const std::uint64_t expected[12] = {1, 1, 2,  4,   8,   17,
                                      37, 82, 184, 418, 967, 2278};
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 1; r <= 12; ++r) {
    const std::uint64_t low = count_lineups(std::max(1, r - 1), r, r);
    const std::uint64_t high = count_lineups(r, r, r);
    if (low != expected[r - 1] || high != expected[r - 1]) {
      detail = "r=" + std::to_string(r) + " got " + std::to_string(low) + "/" +
               std::to_string(high) + ", want " + std::to_string(expected[r - 1]);
      return false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail = "counts 1,1,2,4,8,17,37,82,184,418,967,2278 at both N";
  if (secs >= 60.0) {
    detail += "; runtime " + std::to_string(secs) + "s exceeds 60s";
    return false;
  }
  return true;
}

// 2. Inequality counts 1,2,3 (calibration) then 5, 8; < 5 min.
bool inequality_counts(std::string& detail) {
  const int expected[5] = {1, 2, 3, 5, 8};
  detail = "counts";
  bool ok = true;
  for (int r = 1; r <= 5; ++r) {
    const auto sys = numeric_facets(build_vertices(r, r, testutil::geometric_weights(r)));
    const int got = sys.constraint_count();
    detail += " r" + std::to_string(r) + "=" + std::to_string(got);
    if (got != expected[r - 1]) {
      detail += "(want " + std::to_string(expected[r - 1]) + ")";
      ok = false;
    }
  }
  detail += " under the {exclusions} + {normalization as one} convention";
  return ok;
}

// 3. check_system <=> contains on 1e4 simplex samples per setting.
bool analytic_lp_equivalence(std::string& detail) {
  const int samples = 10000;
  long checked = 0;
  for (int r = 1; r <= 3; ++r) {
    WeightVector w = r == 1 ? WeightVector({rat(1)})
                   : r == 2 ? WeightVector({rat(7, 10), rat(3, 10)})
                            : WeightVector({rat(1, 2), rat(1, 3), rat(1, 6)});
    for (const int N : {2, 3, 5}) {
      for (const int d : {3, 4}) {
        const auto p = build_vertices(N, d, w);
        const auto sys = analytic_halfspaces(N, w, d);
        std::vector<char> agree(samples, 0);
        parallel_for(samples, [&](std::size_t t) {
          std::seed_seq seq{9100u + static_cast<unsigned>(r * 100 + N * 10 + d),
                            static_cast<unsigned>(t)};
          std::mt19937_64 rng(seq);
          const auto v = testutil::sample_simplex(rng, d, N);
          const bool a = check_system(sys, Spectrum(v));
          const bool b = contains(p, Spectrum(v)).member;
          agree[t] = a == b;
        });
        for (int t = 0; t < samples; ++t) {
          if (!agree[t]) {
            detail = "disagreement at r=" + std::to_string(r) +
                     " N=" + std::to_string(N) + " d=" + std::to_string(d);
            return false;
          }
        }
        checked += samples;
      }
    }
  }
  detail = std::to_string(checked) + " samples, zero disagreements";
  return true;
}

// 4. 100/100 vertex hits per setting, tolerance 1e-10.
bool vertex_sequence_oracle(std::string& detail) {
  int settings = 0;
  for (int r = 1; r <= 4; ++r) {
    const auto w = testutil::geometric_weights(r);
    for (int N = std::max(1, r - 1); N <= 4; ++N) {
      for (int d = std::max(2, r); d <= 5; ++d) {
        const auto p = build_vertices(N, d, w);
        std::vector<char> hits(100, 0);
        parallel_for(100, [&](std::size_t t) {
          std::seed_seq seq{4200u + static_cast<unsigned>(r * 100 + N * 10 + d),
                            static_cast<unsigned>(t)};
          std::mt19937_64 rng(seq);
          const auto h = sample_generic_field(rng, N, d);
          const auto rep = verify_vertex_sequence(h, N, w, &p, 1e-10);
          hits[t] = rep.hit;
        });
        for (int t = 0; t < 100; ++t)
          if (!hits[t]) {
            detail = "miss at r=" + std::to_string(r) + " N=" + std::to_string(N) +
                     " d=" + std::to_string(d) + " trial " + std::to_string(t);
            return false;
          }
        ++settings;
      }
    }
  }
  detail = std::to_string(settings) + " settings x 100 trials, all vertex hits";
  return true;
}

// 5. GOK bound over random rotations, three Hamiltonians, 1e3 rotations.
bool gok_bound(std::string& detail) {
  std::mt19937_64 rng(777);
  const int dim = 70;  // symmetric sector of N=4, d=5
  const std::vector<double> w{0.5, 1.0 / 3.0, 1.0 / 6.0};
  for (int trial = 0; trial < 3; ++trial) {
    const Eigen::MatrixXd h = testutil::random_symmetric(rng, dim);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    double e_w = 0;
    for (std::size_t j = 0; j < w.size(); ++j) e_w += w[j] * solver.eigenvalues()(j);
    for (int t = 0; t < 1000; ++t) {
      const Eigen::MatrixXd u = testutil::random_orthogonal(rng, dim);
      double val = 0;
      for (std::size_t j = 0; j < w.size(); ++j)
        val += w[j] * u.col(j).dot(h * u.col(j));
      if (val < e_w - 1e-10) {
        detail = "rotation undercut the ensemble minimum by " +
                 std::to_string(e_w - val);
        return false;
      }
    }
  }
  detail = "3 Hamiltonians x 1000 rotations respect the bound to 1e-10";
  return true;
}

// 6. Lift 3 -> 5 equals the rebuilt vertex set; decomposition equivalence.
bool minkowski_relation(std::string& detail) {
  const auto w = WeightVector({rat(1, 2), rat(1, 3), rat(1, 6)});
  const auto small = build_vertices(3, 3, w);
  const auto large = build_vertices(5, 3, w);
  const auto lifted = minkowski_lift(small, 5);
  if (lifted.vertices().size() != large.vertices().size()) {
    detail = "vertex count changed under the lift";
    return false;
  }
  for (std::size_t l = 0; l < large.vertices().size(); ++l)
    if (!(lifted.vertices()[l].coords == large.vertices()[l].coords)) {
      detail = "lifted vertex " + std::to_string(l) + " differs";
      return false;
    }
  const int samples = 1000;
  std::vector<char> agree(samples, 0);
  std::vector<char> inside(samples, 0);
  parallel_for(samples, [&](std::size_t t) {
    std::seed_seq seq{6000u, static_cast<unsigned>(t)};
    std::mt19937_64 rng(seq);
    const auto mu = testutil::sample_simplex(rng, 3, 5);
    const bool member = contains(large, Spectrum(mu)).member;
    const bool decomposable = minkowski_decomposable(small, 2, Spectrum(mu));
    agree[t] = member == decomposable;
    inside[t] = member;
  });
  int in_count = 0;
  for (int t = 0; t < samples; ++t) {
    if (!agree[t]) {
      detail = "membership and decomposition disagree at sample " + std::to_string(t);
      return false;
    }
    in_count += inside[t];
  }
  detail = "exact vertex equality; 1000 membership/decomposition agreements (" +
           std::to_string(in_count) + " inside)";
  return true;
}

// 7. Hierarchy r=2 -> r=3 verbatim; majorization-ordered chain of domains.
bool hierarchy_and_inclusion(std::string& detail) {
  const auto two = analytic_halfspaces_symbolic(2);
  const auto three = analytic_halfspaces_symbolic(3);
  bool embedded = false;
  for (const auto& l : three) {
    bool same = l.coeffs[0] == two[0].coeffs[0] && l.coeffs[1] == two[0].coeffs[1] &&
                l.coeffs[2] == 0 && l.constant == two[0].constant &&
                l.n_coeff == two[0].n_coeff && l.w_coeffs[0] == two[0].w_coeffs[0] &&
                l.w_coeffs[1] == two[0].w_coeffs[1] && l.w_coeffs[2] == 0;
    embedded = embedded || same;
  }
  if (!embedded) {
    detail = "the r=2 inequality is missing from the r=3 system";
    return false;
  }
  // Six weight vectors totally ordered by majorization, (N, d) = (2, 3).
  const std::vector<WeightVector> chain{
      WeightVector({rat(1, 3), rat(1, 3), rat(1, 3)}),
      WeightVector({rat(1, 2), rat(1, 4), rat(1, 4)}),
      WeightVector({rat(1, 2), rat(1, 3), rat(1, 6)}),
      WeightVector({rat(2, 3), rat(1, 3), rat(0)}),
      WeightVector({rat(3, 4), rat(1, 4), rat(0)}),
      WeightVector({rat(1), rat(0), rat(0)})};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!domain_inclusion(chain[i], chain[i + 1], 2, 3)) {
      detail = "majorization chain broken at link " + std::to_string(i);
      return false;
    }
    if (domain_inclusion(chain[i + 1], chain[i], 2, 3)) {
      detail = "majorization chain not strict at link " + std::to_string(i);
      return false;
    }
    const auto smaller = build_vertices(2, 3, chain[i]);
    const auto larger = build_vertices(2, 3, chain[i + 1]);
    for (const auto& v : smaller.vertices())
      if (!contains(larger, Spectrum(v.coords)).member) {
        detail = "vertex of the smaller domain escapes the larger at link " +
                 std::to_string(i);
        return false;
      }
  }
  detail = "verbatim r=2 constraint in the r=3 system; six-domain chain nested";
  return true;
}

// 8. Schur-Horn transfer on 50 random Bose-Hubbard instances.
bool schur_horn_transfer(std::string& detail) {
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<int> pick_n(2, 4), pick_sites(2, 4);
  std::uniform_real_distribution<double> pick_j(0.2, 2.0), pick_u(0.0, 5.0),
      pick_v(-0.5, 0.5);
  int done = 0, spec_pass = 0;
  while (done < 50) {
    const int N = pick_n(rng);
    const int sites = pick_sites(rng);
    const int r = 1 + done % 3;
    if (sites < r || N < r - 1) continue;
    std::vector<double> v(sites);
    for (auto& x : v) x = pick_v(rng);
    const auto op = build_bose_hubbard(pick_j(rng), pick_u(rng), v, N, sites);
    const auto w = testutil::geometric_weights(r);
    const auto gok = gok_minimizer(op, w);
    if (gok.degenerate) continue;  // deterministic skip, next draw
    const auto gamma = reduce_1rdm(gok.state);
    const auto sys = analytic_halfspaces(N, w, sites);
    const auto rep = schur_horn_check(gamma, sys);
    if (!rep.diag_majorized) {
      detail = "site occupations not majorized by the spectrum at instance " +
               std::to_string(done);
      return false;
    }
    if (!rep.transfer_ok) {
      detail = "spectrum passed but site occupations failed at instance " +
               std::to_string(done);
      return false;
    }
    spec_pass += rep.spec_passes;
    ++done;
  }
  detail = "50 instances: majorization and transfer hold; " +
           std::to_string(spec_pass) + "/50 spectra inside (expected 50)";
  return spec_pass == 50;
}

}  // namespace

int main() {
  criterion(1, "Vertex counts for r = 1..12", vertex_counts);
  criterion(2, "Minimal inequality counts for r = 1..5", inequality_counts);
  criterion(3, "Analytic system matches the membership program", analytic_lp_equivalence);
  criterion(4, "Noninteracting minimizers land on vertices", vertex_sequence_oracle);
  criterion(5, "Ensemble energy bound under rotations", gok_bound);
  criterion(6, "Particle-number lift and decomposition", minkowski_relation);
  criterion(7, "Constraint hierarchy and domain nesting", hierarchy_and_inclusion);
  criterion(8, "Schur-Horn transfer to site occupations", schur_horn_transfer);
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
