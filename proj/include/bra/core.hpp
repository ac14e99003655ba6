#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "bra/errors.hpp"
#include "bra/rational.hpp"

namespace bra {

// Strategies are labeled 1..k.
using Strategy = int;

// A size-d multiset of strategies, kept sorted ascending.
class LocalProfile {
 public:
  LocalProfile() = default;
  LocalProfile(std::initializer_list<Strategy> entries)
      : LocalProfile(std::vector<Strategy>(entries)) {}
  explicit LocalProfile(std::vector<Strategy> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (Strategy s : entries_)
      if (s < 1) throw DimensionError("profile entries must be >= 1");
  }

  const std::vector<Strategy>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  Strategy operator[](int i) const { return entries_[i]; }

  // Multiplicity of strategy s in the profile.
  int count(Strategy s) const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), s));
  }

  auto operator<=>(const LocalProfile&) const = default;

 private:
  std::vector<Strategy> entries_;
};

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t v = 1;
  for (int i = 1; i <= r; ++i) v = v * static_cast<std::uint64_t>(n - r + i) / i;
  return v;
}

// Number of size-d multisets over 1..k.
inline std::uint64_t profile_count(int k, int d) { return binomial(k + d - 1, d); }

// All size-d multisets over 1..k in ascending lexicographic order of their
// sorted tuples. This ordering indexes UpdateRule outputs and is part of the
// stable serialization format.
inline std::vector<LocalProfile> canonical_profiles(int k, int d) {
  if (k < 1 || d < 1) throw DimensionError("canonical_profiles requires k >= 1, d >= 1");
  std::vector<LocalProfile> out;
  out.reserve(profile_count(k, d));
  std::vector<Strategy> cur(d, 1);
  while (true) {
    out.emplace_back(cur);
    int pos = d - 1;
    while (pos >= 0 && cur[pos] == k) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int i = pos + 1; i < d; ++i) cur[i] = cur[pos];
  }
  return out;
}

// Rank of a sorted entries vector in canonical_profiles(k, d) order.
inline int profile_index_sorted(int k, const std::vector<Strategy>& entries) {
  int d = static_cast<int>(entries.size());
  int rank = 0;
  int lo = 1;
  for (int pos = 0; pos < d; ++pos) {
    int rem = d - pos - 1;
    for (int v = lo; v < entries[pos]; ++v)
      rank += static_cast<int>(binomial(k - v + rem, rem));
    lo = entries[pos];
  }
  return rank;
}

// Rank of a profile in canonical_profiles(k, d) order, computed directly.
inline int profile_index(int k, const LocalProfile& p) {
  return profile_index_sorted(k, p.entries());
}

// k x k payoff matrix with exact rational entries; entry (i, j) is the payoff
// of strategy i against strategy j (1-based).
struct PayoffMatrix {
  int k = 0;
  std::vector<std::vector<Rational>> entries;

  PayoffMatrix() = default;
  explicit PayoffMatrix(std::vector<std::vector<Rational>> rows)
      : k(static_cast<int>(rows.size())), entries(std::move(rows)) {
    for (const auto& row : entries)
      if (static_cast<int>(row.size()) != k) throw DimensionError("payoff matrix must be square");
  }

  const Rational& at(Strategy i, Strategy j) const { return entries[i - 1][j - 1]; }
};

// Total payoff of strategy s against the multiset of opponents D.
inline Rational total_payoff(const PayoffMatrix& m, Strategy s, const LocalProfile& d) {
  if (s < 1 || s > m.k) throw DimensionError("strategy out of range");
  Rational sum = 0;
  for (Strategy u : d.entries()) {
    if (u > m.k) throw DimensionError("profile entry exceeds matrix size");
    sum += m.at(s, u);
  }
  return sum;
}

// The unique strategy maximizing total payoff against D. A tie between two
// maximizers is a hard error; the arithmetic is exact so detection is too.
inline Strategy best_response(const PayoffMatrix& m, const LocalProfile& d) {
  Strategy arg = 1;
  Rational best = total_payoff(m, 1, d);
  bool tied = false;
  for (Strategy s = 2; s <= m.k; ++s) {
    Rational v = total_payoff(m, s, d);
    if (v > best) {
      best = std::move(v);
      arg = s;
      tied = false;
    } else if (v == best) {
      tied = true;
    }
  }
  if (tied) throw TieError("best response tied on a profile", d.entries());
  return arg;
}

// A total map from size-d profiles to strategies, stored in canonical
// profile order.
class UpdateRule {
 public:
  UpdateRule() = default;
  UpdateRule(int k, int d, std::vector<Strategy> outputs)
      : k_(k), d_(d), outputs_(std::move(outputs)) {
    if (k < 1 || d < 1) throw DimensionError("update rule requires k >= 1, d >= 1");
    if (outputs_.size() != profile_count(k, d))
      throw DimensionError("update rule output count must be C(k+d-1, d)");
    for (Strategy s : outputs_)
      if (s < 1 || s > k) throw DimensionError("update rule output out of range");
  }

  int k() const { return k_; }
  int d() const { return d_; }
  const std::vector<Strategy>& outputs() const { return outputs_; }
  Strategy output(int profile_idx) const { return outputs_[profile_idx]; }

  Strategy operator()(const LocalProfile& p) const {
    if (p.size() != d_) throw DimensionError("profile size does not match rule degree");
    return outputs_[profile_index(k_, p)];
  }

  auto operator<=>(const UpdateRule&) const = default;

 private:
  int k_ = 0, d_ = 0;
  std::vector<Strategy> outputs_;
};

// The update rule induced by playing best responses in the game M on a
// degree-d graph. Throws TieError if any profile has a tied best response.
inline UpdateRule induced_rule(const PayoffMatrix& m, int d) {
  std::vector<Strategy> outputs;
  outputs.reserve(profile_count(m.k, d));
  for (const LocalProfile& p : canonical_profiles(m.k, d)) outputs.push_back(best_response(m, p));
  return UpdateRule(m.k, d, std::move(outputs));
}

// A d-regular multigraph on vertices 0..n-1. Self-loops are allowed; each
// loop edge [v, v] contributes one neighbor slot holding v itself, so the
// circle with self-linkage has degree 3.
class RegularGraph {
 public:
  static RegularGraph from_edges(int n, int degree,
                                 std::vector<std::pair<int, int>> edges) {
    if (n < 1 || degree < 1) throw DimensionError("graph requires n >= 1, degree >= 1");
    RegularGraph g;
    g.n_ = n;
    g.degree_ = degree;
    g.adj_.assign(n, {});
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n) throw DimensionError("edge endpoint out of range");
      if (u == v) {
        g.adj_[u].push_back(u);
      } else {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
      }
    }
    for (int v = 0; v < n; ++v) {
      if (static_cast<int>(g.adj_[v].size()) != degree)
        throw DimensionError("graph is not " + std::to_string(degree) + "-regular at vertex " +
                             std::to_string(v));
      std::sort(g.adj_[v].begin(), g.adj_[v].end());
    }
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);
    return g;
  }

  // C_n: vertex i adjacent to i-1 and i+1 mod n. C_1 degenerates to a vertex
  // seeing itself twice, C_2 to a doubled edge.
  static RegularGraph circle(int n) {
    std::vector<std::pair<int, int>> edges;
    if (n == 1) {
      edges = {{0, 0}, {0, 0}};
    } else {
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    }
    return from_edges(n, 2, std::move(edges));
  }

  // The circle with every vertex additionally linked to itself; degree 3,
  // with the vertex's own state appearing once in its profile.
  static RegularGraph circle_with_self(int n) {
    RegularGraph g = circle(n);
    std::vector<std::pair<int, int>> edges = g.edges_;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i);
    return from_edges(n, 3, std::move(edges));
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_ = 0, degree_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// One state per vertex, 1..k.
using Configuration = std::vector<Strategy>;

// Simultaneous update: every vertex applies F to the multiset of its
// neighbors' states in c.
inline Configuration step(const RegularGraph& g, const Configuration& c, const UpdateRule& f) {
  if (g.degree() != f.d()) throw DimensionError("graph degree does not match rule degree");
  if (static_cast<int>(c.size()) != g.n()) throw DimensionError("configuration length mismatch");
  for (Strategy s : c)
    if (s < 1 || s > f.k()) throw DimensionError("configuration state out of range");
  Configuration next(c.size());
  std::vector<Strategy> seen;
  seen.reserve(f.d());
  for (int v = 0; v < g.n(); ++v) {
    seen.clear();
    for (int u : g.neighbors(v)) seen.push_back(c[u]);
    std::sort(seen.begin(), seen.end());
    next[v] = f.output(profile_index_sorted(f.k(), seen));
  }
  return next;
}

}  // namespace bra
