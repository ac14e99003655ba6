#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bra/lp.hpp"

using namespace bra;

namespace {

// Exact satisfaction check for a witness against every constraint.
bool satisfies(const LinearFeasibilityProblem& p, const FeasibilityWitness& w) {
  if (!w.feasible) return false;
  for (int v = 0; v < p.variable_count(); ++v)
    if (p.is_nonnegative(v) && w.assignment[v] < 0) return false;
  for (const auto& c : p.constraints()) {
    Rational lhs = 0;
    for (const auto& [v, coeff] : c.terms) lhs += coeff * w.assignment[v];
    if (c.rel == Relation::Equal ? lhs != c.rhs : lhs < c.rhs) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("overlapping lower bounds are feasible") {
  LinearFeasibilityProblem p;
  int x = p.add_variable("x");
  p.add_constraint({{x, 1}}, Relation::GreaterEqual, 1);
  p.add_constraint({{x, 1}}, Relation::GreaterEqual, 2);
  auto w = solve_feasibility(p);
  REQUIRE(w.feasible);
  CHECK(w.assignment[x] >= 2);
  CHECK(satisfies(p, w));
}

TEST_CASE("contradictory bounds are infeasible") {
  LinearFeasibilityProblem p;
  int x = p.add_variable("x");
  p.add_constraint({{x, 1}}, Relation::GreaterEqual, 1);
  p.add_constraint({{x, -1}}, Relation::GreaterEqual, 0);
  CHECK_FALSE(solve_feasibility(p).feasible);
}

TEST_CASE("equality systems are solved exactly") {
  LinearFeasibilityProblem p;
  int x = p.add_variable("x", true);
  int y = p.add_variable("y", true);
  p.add_constraint({{x, 1}, {y, 1}}, Relation::Equal, 1);
  p.add_constraint({{x, 1}, {y, -1}}, Relation::Equal, 0);
  auto w = solve_feasibility(p);
  REQUIRE(w.feasible);
  CHECK(w.assignment[x] == Rational(1, 2));
  CHECK(w.assignment[y] == Rational(1, 2));
}

TEST_CASE("free variables may take negative values") {
  LinearFeasibilityProblem p;
  int x = p.add_variable("x");
  p.add_constraint({{x, 1}}, Relation::Equal, -3);
  auto w = solve_feasibility(p);
  REQUIRE(w.feasible);
  CHECK(w.assignment[x] == -3);
}

TEST_CASE("nonnegative variables reject negative requirements") {
  LinearFeasibilityProblem p;
  int x = p.add_variable("x", true);
  p.add_constraint({{x, 1}}, Relation::Equal, -1);
  CHECK_FALSE(solve_feasibility(p).feasible);
}

TEST_CASE("the hull midpoint system pins its unique witness") {
  // lambda1 * (1,0) + lambda2 * (0,1) = mu1 * (1/2,1/2), convex weights.
  LinearFeasibilityProblem p;
  int l1 = p.add_variable("lambda_0", true);
  int l2 = p.add_variable("lambda_1", true);
  int m1 = p.add_variable("mu_0", true);
  p.add_constraint({{l1, 1}, {l2, 1}}, Relation::Equal, 1);
  p.add_constraint({{m1, 1}}, Relation::Equal, 1);
  p.add_constraint({{l1, 1}, {m1, Rational(-1, 2)}}, Relation::Equal, 0);
  p.add_constraint({{l2, 1}, {m1, Rational(-1, 2)}}, Relation::Equal, 0);
  auto w = solve_feasibility(p);
  REQUIRE(w.feasible);
  CHECK(w.assignment[l1] == Rational(1, 2));
  CHECK(w.assignment[l2] == Rational(1, 2));
  CHECK(w.assignment[m1] == 1);
}

TEST_CASE("solving the same problem twice gives the same witness") {
  LinearFeasibilityProblem p;
  int x = p.add_variable("x");
  int y = p.add_variable("y");
  int z = p.add_variable("z", true);
  p.add_constraint({{x, 2}, {y, 1}, {z, -1}}, Relation::GreaterEqual, 4);
  p.add_constraint({{x, 1}, {y, -1}}, Relation::Equal, 1);
  p.add_constraint({{y, 1}, {z, 3}}, Relation::GreaterEqual, 0);
  auto w1 = solve_feasibility(p);
  auto w2 = solve_feasibility(p);
  REQUIRE(w1.feasible);
  CHECK(w1.assignment == w2.assignment);
  CHECK(satisfies(p, w1));
}

TEST_CASE("redundant and empty constraints behave sanely") {
  LinearFeasibilityProblem p;
  int x = p.add_variable("x", true);
  p.add_constraint({{x, 1}}, Relation::GreaterEqual, 1);
  p.add_constraint({{x, 1}}, Relation::GreaterEqual, 1);
  p.add_constraint({}, Relation::Equal, 0);  // vacuous
  auto w = solve_feasibility(p);
  REQUIRE(w.feasible);
  CHECK(satisfies(p, w));

  LinearFeasibilityProblem q;
  q.add_variable("x");
  q.add_constraint({}, Relation::GreaterEqual, 1);  // 0 >= 1
  CHECK_FALSE(solve_feasibility(q).feasible);
}

TEST_CASE("constraints must reference declared variables") {
  LinearFeasibilityProblem p;
  p.add_variable("x");
  CHECK_THROWS_AS(p.add_constraint({{1, 1}}, Relation::Equal, 0), DimensionError);
  CHECK_THROWS_AS(p.add_constraint({{-1, 1}}, Relation::Equal, 0), DimensionError);
}

TEST_CASE("rational coefficients keep exactness through pivots") {
  // x/3 + y/7 = 1, x - y = 1/2 has the unique solution x = 63/40 + ...;
  // assert exact satisfaction rather than a hand-solved value.
  LinearFeasibilityProblem p;
  int x = p.add_variable("x");
  int y = p.add_variable("y");
  p.add_constraint({{x, Rational(1, 3)}, {y, Rational(1, 7)}}, Relation::Equal, 1);
  p.add_constraint({{x, 1}, {y, -1}}, Relation::Equal, Rational(1, 2));
  auto w = solve_feasibility(p);
  REQUIRE(w.feasible);
  CHECK(satisfies(p, w));
  // Unique solution of the 2x2 system, computed by exact elimination:
  // x = (1 + 1/14) / (1/3 + 1/7) = (15/14) / (10/21) = 9/4; y = 9/4 - 1/2.
  CHECK(w.assignment[x] == Rational(9, 4));
  CHECK(w.assignment[y] == Rational(7, 4));
}
