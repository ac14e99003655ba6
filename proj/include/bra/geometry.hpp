#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bra/core.hpp"
#include "bra/errors.hpp"
#include "bra/linalg.hpp"
#include "bra/lp.hpp"

namespace bra {

// A point of the extended strategy space: k rational coordinates summing to
// exactly 1. Points of T_d additionally have nonnegative coordinates that are
// multiples of 1/d, but that is not enforced by the type.
struct SimplexPoint {
  RationalVector coords;

  SimplexPoint() = default;
  explicit SimplexPoint(RationalVector c) : coords(std::move(c)) {
    Rational sum = 0;
    for (const Rational& x : coords) sum += x;
    if (sum != 1) throw DimensionError("simplex point coordinates must sum to 1");
  }

  int k() const { return static_cast<int>(coords.size()); }
  bool operator==(const SimplexPoint&) const = default;
};

// P(D): coordinate j is the multiplicity of j in D divided by d.
inline SimplexPoint point_of(const LocalProfile& d, int k) {
  RationalVector coords(k, 0);
  for (Strategy s : d.entries()) {
    if (s > k) throw DimensionError("profile entry exceeds strategy count");
    coords[s - 1] += Rational(1, d.size());
  }
  return SimplexPoint(std::move(coords));
}

// The partition of the canonical profiles by rule output: cell i-1 holds the
// profiles mapped to strategy i. Empty cells are allowed.
struct RulePartition {
  int k = 0, d = 0;
  std::vector<std::vector<LocalProfile>> cells;
};

inline RulePartition partition_of(const UpdateRule& f) {
  RulePartition p;
  p.k = f.k();
  p.d = f.d();
  p.cells.assign(f.k(), {});
  auto profs = canonical_profiles(f.k(), f.d());
  for (std::size_t t = 0; t < profs.size(); ++t)
    p.cells[f.output(static_cast<int>(t)) - 1].push_back(profs[t]);
  return p;
}

// Result of the hull intersection test: when the hulls meet, `point` is a
// common point and lambda/mu are the convex coefficients over X and Y.
struct HullIntersection {
  bool intersects = false;
  SimplexPoint point;
  RationalVector lambda, mu;

  explicit operator bool() const { return intersects; }
};

// Do the convex hulls of {P(D) : D in X} and {P(D) : D in Y} intersect?
// Decided by exact rational linear feasibility.
inline HullIntersection hulls_intersect(const std::vector<LocalProfile>& x,
                                        const std::vector<LocalProfile>& y, int k) {
  if (x.empty() || y.empty()) throw std::invalid_argument("hulls_intersect: empty input set");
  for (const auto& d : x)
    for (const auto& e : y)
      if (d == e) throw std::invalid_argument("hulls_intersect: inputs are not disjoint");

  LinearFeasibilityProblem lp;
  std::vector<int> lv, mv;
  for (std::size_t i = 0; i < x.size(); ++i)
    lv.push_back(lp.add_variable("lambda_" + std::to_string(i), true));
  for (std::size_t j = 0; j < y.size(); ++j)
    mv.push_back(lp.add_variable("mu_" + std::to_string(j), true));

  std::vector<std::pair<int, Rational>> sum_l, sum_m;
  for (int v : lv) sum_l.emplace_back(v, 1);
  for (int v : mv) sum_m.emplace_back(v, 1);
  lp.add_constraint(std::move(sum_l), Relation::Equal, 1);
  lp.add_constraint(std::move(sum_m), Relation::Equal, 1);

  std::vector<SimplexPoint> px, py;
  for (const auto& d : x) px.push_back(point_of(d, k));
  for (const auto& e : y) py.push_back(point_of(e, k));
  for (int c = 0; c < k; ++c) {
    std::vector<std::pair<int, Rational>> row;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (px[i].coords[c] != 0) row.emplace_back(lv[i], px[i].coords[c]);
    for (std::size_t j = 0; j < y.size(); ++j)
      if (py[j].coords[c] != 0) row.emplace_back(mv[j], -py[j].coords[c]);
    lp.add_constraint(std::move(row), Relation::Equal, 0);
  }

  HullIntersection out;
  FeasibilityWitness w = solve_feasibility(lp);
  if (!w.feasible) return out;
  out.intersects = true;
  out.lambda.assign(w.assignment.begin(), w.assignment.begin() + x.size());
  out.mu.assign(w.assignment.begin() + x.size(), w.assignment.end());
  RationalVector coords(k, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int c = 0; c < k; ++c) coords[c] += out.lambda[i] * px[i].coords[c];
  out.point = SimplexPoint(std::move(coords));
  return out;
}

// Realizability: a partition is induced by some game iff the convex hulls
// of every pair of distinct nonempty cells are disjoint.
inline bool is_realizable(const RulePartition& p) {
  for (int i = 0; i < p.k; ++i) {
    if (p.cells[i].empty()) continue;
    for (int j = i + 1; j < p.k; ++j) {
      if (p.cells[j].empty()) continue;
      if (hulls_intersect(p.cells[i], p.cells[j], p.k).intersects) return false;
    }
  }
  return true;
}

/*
 * Find a payoff matrix whose induced rule is exactly F, or throw
 * InfeasibleError when no game induces it.
 *
 * The matrix entries are LP unknowns: for every profile D with F(D) = i and
 * every other strategy j we require [M P(D)]_i - [M P(D)]_j >= 1. The margin
 * of 1 costs no generality (payoff matrices scale without changing argmaxes)
 * and keeps the winner strict, so the induced rule has no ties. Feasibility
 * of this system coincides with is_realizable; the acceptance suite checks
 * that equivalence exhaustively.
 */
inline PayoffMatrix synthesize_matrix(const UpdateRule& f) {
  const int k = f.k();
  const int deg = f.d();
  LinearFeasibilityProblem lp;
  std::vector<std::vector<int>> mv(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      mv[i][j] = lp.add_variable("m_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));

  auto profs = canonical_profiles(k, deg);
  for (std::size_t t = 0; t < profs.size(); ++t) {
    int winner = f.output(static_cast<int>(t)) - 1;
    std::vector<int> cnt(k, 0);
    for (Strategy s : profs[t].entries()) ++cnt[s - 1];
    for (int j = 0; j < k; ++j) {
      if (j == winner) continue;
      std::vector<std::pair<int, Rational>> row;
      for (int u = 0; u < k; ++u) {
        if (cnt[u] == 0) continue;
        row.emplace_back(mv[winner][u], cnt[u]);
        row.emplace_back(mv[j][u], -cnt[u]);
      }
      lp.add_constraint(std::move(row), Relation::GreaterEqual, deg);
    }
  }

  FeasibilityWitness w = solve_feasibility(lp);
  if (!w.feasible)
    throw InfeasibleError("no payoff matrix induces this update rule");
  std::vector<std::vector<Rational>> entries(k, std::vector<Rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) entries[i][j] = w.assignment[mv[i][j]];
  PayoffMatrix m(std::move(entries));
  if (induced_rule(m, deg) != f)
    throw std::logic_error("synthesized matrix fails to reproduce the rule");
  return m;
}

// Rays from the central equilibrium point, one per column; must be linearly
// independent.
struct RayBasis {
  RationalMatrix u;
};

// Solve M U = A, i.e. M = A U^{-1}, exactly. A must have, in every column,
// equal entries except for a strictly smaller diagonal entry. The reflection
// condition on the rays is not checked here; callers wanting a genuine best
// response division should verify via induced_rule.
inline PayoffMatrix matrix_from_rays(const RayBasis& rays, const RationalMatrix& a) {
  int k = static_cast<int>(rays.u.size());
  if (k == 0 || static_cast<int>(a.size()) != k)
    throw DimensionError("matrix_from_rays: dimension mismatch");
  for (int i = 0; i < k; ++i)
    if (static_cast<int>(rays.u[i].size()) != k || static_cast<int>(a[i].size()) != k)
      throw DimensionError("matrix_from_rays: matrices must be k x k");
  for (int col = 0; col < k; ++col) {
    const Rational* off = nullptr;
    for (int row = 0; row < k; ++row) {
      if (row == col) continue;
      if (!off)
        off = &a[row][col];
      else if (a[row][col] != *off)
        throw PatternError("column " + std::to_string(col + 1) +
                           " of A has unequal off-diagonal entries");
    }
    if (off && !(a[col][col] < *off))
      throw PatternError("diagonal of column " + std::to_string(col + 1) +
                         " of A must be strictly smaller");
  }
  return PayoffMatrix(multiply(a, inverse(rays.u)));  // inverse throws SingularError
}

// x* = M^{-1} l / (l^T M^{-1} l): the unique point of the extended strategy
// space where all k payoffs [M x]_i coincide.
inline SimplexPoint nash_point(const PayoffMatrix& m) {
  RationalMatrix inv = inverse(m.entries);  // SingularError if det M = 0
  int k = m.k;
  RationalVector y(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) y[i] += inv[i][j];
  Rational denom = 0;
  for (const Rational& v : y) denom += v;
  if (denom == 0) throw DegenerateError("l^T M^{-1} l is zero");
  for (Rational& v : y) v /= denom;
  return SimplexPoint(std::move(y));
}

}  // namespace bra
