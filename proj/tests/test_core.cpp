#include "doctest.h"

#include <random>

#include "bosepoly/linprog.hpp"
#include "bosepoly/rational.hpp"

using namespace bosepoly;

TEST_SUITE_BEGIN("core");

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/3") == rat(1, 3));
  CHECK(parse_rational("-2/6") == rat(-1, 3));
  CHECK(parse_rational("7") == rat(7));
  CHECK(parse_rational("0.25") == rat(1, 4));
  CHECK(parse_rational("2.1") == rat(21, 10));
  CHECK(parse_rational("-0.3") == rat(-3, 10));
  CHECK_THROWS_AS(parse_rational(""), NormalizationError);
  CHECK_THROWS_AS(parse_rational("x"), NormalizationError);
  CHECK_THROWS_AS(parse_rational("1/0"), NormalizationError);
}

TEST_CASE("rationalize snaps doubles to small denominators") {
  CHECK(rationalize(0.3) == rat(3, 10));
  CHECK(rationalize(1.0 / 3.0) == rat(1, 3));
  CHECK(rationalize(0.5) == rat(1, 2));
  CHECK(rationalize(-2.1) == rat(-21, 10));
  CHECK(rationalize(0.0) == 0);
  // Coarse bound keeps the denominator under control.
  const Rat q = rationalize(0.123456789, 1000);
  CHECK(q.get_den() <= 1000);
  const Rat err = abs(q - rationalize(0.123456789));
  CHECK(err.get_d() < 1e-5);
}

TEST_CASE("exact lp: bounded maximization") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6
  ExactLp lp(2);
  lp.add_row({rat(1), rat(2)}, Rel::Le, rat(4));
  lp.add_row({rat(3), rat(1)}, Rel::Le, rat(6));
  const auto res = lp.maximize({rat(1), rat(1)});
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == rat(14, 5));
  CHECK(res.x[0] == rat(8, 5));
  CHECK(res.x[1] == rat(6, 5));
}

TEST_CASE("exact lp: equality and ge rows") {
  // max 2x + 3y s.t. x + y = 3, x >= 1, y <= 4
  ExactLp lp(2);
  lp.add_row({rat(1), rat(1)}, Rel::Eq, rat(3));
  lp.add_row({rat(1), rat(0)}, Rel::Ge, rat(1));
  lp.add_row({rat(0), rat(1)}, Rel::Le, rat(4));
  const auto res = lp.maximize({rat(2), rat(3)});
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == rat(8));  // x = 1, y = 2
}

TEST_CASE("exact lp: infeasible and unbounded") {
  {
    ExactLp lp(1);
    lp.add_row({rat(1)}, Rel::Ge, rat(2));
    lp.add_row({rat(1)}, Rel::Le, rat(1));
    CHECK(lp.feasible().status == LpStatus::Infeasible);
  }
  {
    ExactLp lp(1);
    lp.add_row({rat(-1)}, Rel::Le, rat(0));
    CHECK(lp.maximize({rat(1)}).status == LpStatus::Unbounded);
  }
}

TEST_CASE("exact lp: degenerate system terminates (Bland)") {
  ExactLp lp(3);
  lp.add_row({rat(1), rat(1), rat(0)}, Rel::Le, rat(0));
  lp.add_row({rat(1), rat(0), rat(1)}, Rel::Le, rat(0));
  lp.add_row({rat(0), rat(1), rat(1)}, Rel::Le, rat(0));
  const auto res = lp.maximize({rat(1), rat(1), rat(1)});
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == 0);
}

TEST_CASE("strict cone oracle agrees with exact lp on random integer cones") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> rows(1, 8);
  std::uniform_int_distribution<int> dims(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = dims(rng);
    const int m = rows(rng);
    std::vector<std::vector<long>> sys(m, std::vector<long>(n));
    for (auto& row : sys)
      for (auto& x : row) x = coef(rng);
    const bool fast = StrictConeOracle::feasible(sys, n);
    // Reference: feasibility of { C g >= 1, g >= 0 } with a fresh exact LP.
    ExactLp lp(n);
    for (const auto& row : sys) {
      std::vector<Rat> a(n);
      for (int j = 0; j < n; ++j) a[j] = rat(row[j]);
      lp.add_row(std::move(a), Rel::Ge, rat(1));
    }
    const bool slow = lp.feasible().status == LpStatus::Optimal;
    CHECK(fast == slow);
  }
}

TEST_CASE("strict cone oracle returns a valid witness") {
  std::vector<std::vector<long>> sys{{1, 0}, {0, 1}, {-1, 2}};
  std::vector<Rat> g;
  REQUIRE(StrictConeOracle::feasible(sys, 2, &g));
  for (const auto& row : sys) {
    Rat dot = 0;
    for (int j = 0; j < 2; ++j) dot += rat(row[j]) * g[j];
    CHECK(dot > 0);
  }
  CHECK_FALSE(StrictConeOracle::feasible({{1, 0}, {-1, 0}}, 2));
  CHECK_FALSE(StrictConeOracle::feasible({{0, 0}}, 2));
}

TEST_SUITE_END();
