#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bra/errors.hpp"
#include "bra/linalg.hpp"
#include "bra/rational.hpp"

namespace bra {

enum class Relation { GreaterEqual, Equal };

// An exact-rational linear feasibility problem: named variables (free by
// default, optionally declared nonnegative) and affine constraints of the
// form sum(coeff * var) >= rhs or == rhs.
class LinearFeasibilityProblem {
 public:
  struct Constraint {
    std::vector<std::pair<int, Rational>> terms;
    Relation rel;
    Rational rhs;
  };

  int add_variable(std::string name, bool nonnegative = false) {
    names_.push_back(std::move(name));
    nonnegative_.push_back(nonnegative);
    return static_cast<int>(names_.size()) - 1;
  }

  void add_constraint(std::vector<std::pair<int, Rational>> terms, Relation rel, Rational rhs) {
    for (const auto& [v, c] : terms)
      if (v < 0 || v >= variable_count()) throw DimensionError("constraint references unknown variable");
    constraints_.push_back({std::move(terms), rel, std::move(rhs)});
  }

  int variable_count() const { return static_cast<int>(names_.size()); }
  const std::string& variable_name(int v) const { return names_[v]; }
  bool is_nonnegative(int v) const { return nonnegative_[v]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  std::vector<std::string> names_;
  std::vector<bool> nonnegative_;
  std::vector<Constraint> constraints_;
};

struct FeasibilityWitness {
  bool feasible = false;
  RationalVector assignment;  // one value per declared variable when feasible

  explicit operator bool() const { return feasible; }
};

/*
 * Phase-1 simplex over exact rationals with Bland's anti-cycling rule.
 *
 * Free variables are split x = x+ - x-, >= rows get a surplus column, every
 * row gets an artificial variable forming the initial basis, and we minimize
 * the sum of artificials. Feasible iff that minimum is zero. Bland's rule
 * (lowest eligible column; ties in the ratio test broken by lowest basic
 * variable index) makes the pivot sequence, and hence the returned witness,
 * deterministic.
 */
inline FeasibilityWitness solve_feasibility(const LinearFeasibilityProblem& p) {
  const int nvars = p.variable_count();
  const auto& cons = p.constraints();
  const int m = static_cast<int>(cons.size());

  // Column layout: structural columns first, then surplus, then artificials.
  std::vector<int> col_of_plus(nvars), col_of_minus(nvars, -1);
  int ncols = 0;
  for (int v = 0; v < nvars; ++v) {
    col_of_plus[v] = ncols++;
    if (!p.is_nonnegative(v)) col_of_minus[v] = ncols++;
  }
  int surplus_base = ncols;
  for (int i = 0; i < m; ++i)
    if (cons[i].rel == Relation::GreaterEqual) ++ncols;
  int art_base = ncols;
  ncols += m;

  std::vector<RationalVector> tab(m, RationalVector(ncols + 1, 0));
  int next_surplus = surplus_base;
  for (int i = 0; i < m; ++i) {
    for (const auto& [v, c] : cons[i].terms) {
      tab[i][col_of_plus[v]] += c;
      if (col_of_minus[v] >= 0) tab[i][col_of_minus[v]] -= c;
    }
    tab[i][ncols] = cons[i].rhs;
    if (cons[i].rel == Relation::GreaterEqual) tab[i][next_surplus++] = -1;
    if (tab[i][ncols] < 0)
      for (auto& x : tab[i]) x = -x;
    tab[i][art_base + i] = 1;
  }

  // Reduced-cost row for minimizing the artificial sum; value in obj[ncols].
  std::vector<int> basis(m);
  RationalVector obj(ncols + 1, 0);
  for (int i = 0; i < m; ++i) {
    basis[i] = art_base + i;
    for (int j = 0; j < ncols + 1; ++j)
      if (j < art_base || j == ncols) obj[j] -= tab[i][j];
  }

  while (true) {
    int enter = -1;
    for (int j = 0; j < art_base; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][ncols] / tab[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave < 0) throw InfeasibleError("phase-1 simplex unbounded; problem is malformed");
    Rational piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (int j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  FeasibilityWitness w;
  // Artificial sum is -obj[ncols]; zero means a feasible basis was reached.
  if (obj[ncols] != 0) {
    w.feasible = false;
    return w;
  }
  RationalVector col_value(ncols, 0);
  for (int i = 0; i < m; ++i) col_value[basis[i]] = tab[i][ncols];
  w.feasible = true;
  w.assignment.resize(nvars);
  for (int v = 0; v < nvars; ++v) {
    w.assignment[v] = col_value[col_of_plus[v]];
    if (col_of_minus[v] >= 0) w.assignment[v] -= col_value[col_of_minus[v]];
  }
  return w;
}

}  // namespace bra
