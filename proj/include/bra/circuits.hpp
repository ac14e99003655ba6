#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bra/core.hpp"
#include "bra/errors.hpp"

namespace bra {

enum class EdgeColour { Dark, Light };

inline EdgeColour other(EdgeColour c) {
  return c == EdgeColour::Dark ? EdgeColour::Light : EdgeColour::Dark;
}

// Undirected edge with endpoints stored low-to-high; a == b is a self-loop.
struct Edge {
  Strategy a = 0, b = 0;

  Edge() = default;
  Edge(Strategy x, Strategy y) : a(std::min(x, y)), b(std::max(x, y)) {}
  bool loop() const { return a == b; }
  auto operator<=>(const Edge&) const = default;
};

// Gr(X,Y): dark edges are the pairs of X, light edges the pairs of Y, and the
// vertices are exactly the strategies occurring as an endpoint.
struct BicoloredMultigraph {
  std::vector<Strategy> vertices;
  std::vector<Edge> dark_edges, light_edges;
};

inline Edge edge_of(const LocalProfile& p) {
  if (p.size() != 2) throw DimensionError("pair graphs require d=2 profiles");
  return Edge(p.entries()[0], p.entries()[1]);
}

inline BicoloredMultigraph build_pair_graph(const std::vector<LocalProfile>& x,
                                            const std::vector<LocalProfile>& y) {
  for (const auto& d : x)
    for (const auto& e : y)
      if (d == e) throw std::invalid_argument("build_pair_graph: inputs are not disjoint");
  BicoloredMultigraph g;
  for (const auto& d : x) g.dark_edges.push_back(edge_of(d));
  for (const auto& e : y) g.light_edges.push_back(edge_of(e));
  for (auto* edges : {&g.dark_edges, &g.light_edges}) {
    std::sort(edges->begin(), edges->end());
    edges->erase(std::unique(edges->begin(), edges->end()), edges->end());
  }
  for (const auto& es : {g.dark_edges, g.light_edges})
    for (const Edge& e : es) {
      g.vertices.push_back(e.a);
      g.vertices.push_back(e.b);
    }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  return g;
}

struct WalkStep {
  Edge edge;
  EdgeColour colour = EdgeColour::Dark;
  Strategy from = 0, to = 0;
};

// A closed walk whose consecutive edges differ in colour, including at the
// closing step (last step's colour differs from the first's).
struct AlternatingWalk {
  std::vector<WalkStep> steps;
};

/*
 * Alternating-cycle search. Every edge instance is expanded into directed
 * instances (one per traversal direction; loops get a single one and count as
 * incident twice), and a transition u -> w is allowed when u ends where w
 * starts with the opposite colour. A closed alternating walk exists iff this
 * digraph has a directed cycle: any directed cycle projects to a closed walk
 * with alternating colours (the wrap-around transition is itself a digraph
 * arc), and conversely an alternating closed walk is itself a closed directed
 * walk, which always contains a directed cycle.
 */
inline std::optional<AlternatingWalk> find_alternating_cycle(const BicoloredMultigraph& g) {
  struct Node {
    Strategy from, to;
    EdgeColour colour;
    Edge edge;
  };
  std::vector<Node> nodes;
  auto add_edge = [&](const Edge& e, EdgeColour c) {
    nodes.push_back({e.a, e.b, c, e});
    if (!e.loop()) nodes.push_back({e.b, e.a, c, e});
  };
  for (const Edge& e : g.dark_edges) add_edge(e, EdgeColour::Dark);
  for (const Edge& e : g.light_edges) add_edge(e, EdgeColour::Light);

  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (nodes[u].to == nodes[w].from && nodes[u].colour != nodes[w].colour)
        adj[u].push_back(w);

  // Iterative DFS; a back arc to a node on the current path closes a cycle.
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on path, 2 done
  std::vector<int> path;
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    path.assign(1, root);
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        int w = adj[u][next++];
        if (state[w] == 1) {
          AlternatingWalk walk;
          auto it = std::find(path.begin(), path.end(), w);
          for (; it != path.end(); ++it) {
            const Node& nd = nodes[*it];
            walk.steps.push_back({nd.edge, nd.colour, nd.from, nd.to});
          }
          return walk;
        }
        if (state[w] == 0) {
          state[w] = 1;
          path.push_back(w);
          stack.emplace_back(w, 0);
        }
      } else {
        state[u] = 2;
        path.pop_back();
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

inline bool has_alternating_cycle(const BicoloredMultigraph& g) {
  return find_alternating_cycle(g).has_value();
}

// The pair (X,Y) is (k,2) unacceptable iff Gr(X,Y) has an alternating cycle;
// this combinatorial test is equivalent to the geometric hull test.
inline bool is_unacceptable_pair(const std::vector<LocalProfile>& x,
                                 const std::vector<LocalProfile>& y, int k) {
  for (const auto* side : {&x, &y})
    for (const auto& d : *side)
      for (Strategy s : d.entries())
        if (s > k) throw DimensionError("profile entry exceeds strategy count");
  return has_alternating_cycle(build_pair_graph(x, y));
}

// Catalog shapes: the even cycle C_k, and the dumbbell Dum(a,b)_k made
// of two odd cycles C_{a+1}, C_{b+1} (a loop when the parameter is 0) joined
// by a path, k vertices in total. When a+b = k-1 the path degenerates and the
// cycles share a vertex.
struct FundamentalPairShape {
  enum class Kind { EvenCycle, Dumbbell };

  Kind kind = Kind::EvenCycle;
  int k = 0;
  int a = 0, b = 0;  // dumbbell only

  static FundamentalPairShape even_cycle(int k) { return {Kind::EvenCycle, k, 0, 0}; }
  static FundamentalPairShape dumbbell(int a, int b, int k) { return {Kind::Dumbbell, k, a, b}; }
  bool operator==(const FundamentalPairShape&) const = default;
};

inline std::string shape_name(const FundamentalPairShape& s) {
  if (s.kind == FundamentalPairShape::Kind::EvenCycle) return "C_" + std::to_string(s.k);
  return "Dum(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")_" + std::to_string(s.k);
}

/*
 * The good colouring of a shape: edges are 2-coloured so that a vertex with
 * exactly two distinct incident edges sees different colours, while at any
 * other vertex two incident edges share a colour iff they lie on the same
 * cycle. For the catalog shapes these constraints are connected and
 * consistent, so the colouring is unique up to the global swap; we pin the
 * first constructed edge to dark.
 */
inline BicoloredMultigraph good_colouring(const FundamentalPairShape& shape) {
  struct Inst {
    Edge e;
    int cycle;  // -1 = on no cycle
  };
  std::vector<Inst> inst;

  if (shape.kind == FundamentalPairShape::Kind::EvenCycle) {
    if (shape.k < 2 || shape.k % 2 != 0)
      throw std::invalid_argument("even cycle shape requires even k >= 2");
    for (int i = 1; i <= shape.k; ++i)
      inst.push_back({Edge(i, i % shape.k + 1), 0});
  } else {
    const int a = shape.a, b = shape.b, k = shape.k;
    if (k < 2 || a < 0 || b < 0 || a % 2 != 0 || b % 2 != 0 || a + b >= k)
      throw std::invalid_argument("dumbbell shape requires even a,b with a+b < k");
    // Left cycle on 1..a+1, path a+1..k-b, right cycle on k-b..k.
    if (a == 0)
      inst.push_back({Edge(1, 1), 0});
    else
      for (int i = 1; i <= a + 1; ++i)
        inst.push_back({Edge(i, i % (a + 1) + 1), 0});
    for (int i = a + 1; i < k - b; ++i) inst.push_back({Edge(i, i + 1), -1});
    if (b == 0)
      inst.push_back({Edge(k, k), 1});
    else
      for (int i = k - b; i <= k; ++i)
        inst.push_back({Edge(i, i == k ? k - b : i + 1), 1});
  }

  const int m = static_cast<int>(inst.size());
  std::vector<std::vector<int>> incident(shape.k + 1);
  for (int i = 0; i < m; ++i) {
    incident[inst[i].e.a].push_back(i);
    if (!inst[i].e.loop()) incident[inst[i].e.b].push_back(i);
  }

  // Pairwise constraints; true = must differ.
  std::vector<std::vector<std::pair<int, bool>>> cons(m);
  for (int v = 1; v <= shape.k; ++v) {
    const auto& ids = incident[v];
    for (std::size_t p = 0; p < ids.size(); ++p)
      for (std::size_t q = p + 1; q < ids.size(); ++q) {
        bool differ = ids.size() == 2 ? true : inst[ids[p]].cycle != inst[ids[q]].cycle ||
                                                   inst[ids[p]].cycle == -1;
        cons[ids[p]].emplace_back(ids[q], differ);
        cons[ids[q]].emplace_back(ids[p], differ);
      }
  }

  std::vector<int> colour(m, -1);
  std::vector<int> queue{0};
  colour[0] = 0;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    for (auto [w, differ] : cons[u]) {
      int want = differ ? 1 - colour[u] : colour[u];
      if (colour[w] == -1) {
        colour[w] = want;
        queue.push_back(w);
      } else if (colour[w] != want) {
        throw std::logic_error("good colouring constraints are inconsistent");
      }
    }
  }

  BicoloredMultigraph g;
  for (int v = 1; v <= shape.k; ++v) g.vertices.push_back(v);
  for (int i = 0; i < m; ++i) {
    if (colour[i] == -1) throw std::logic_error("good colouring left an edge unconstrained");
    (colour[i] == 0 ? g.dark_edges : g.light_edges).push_back(inst[i].e);
  }
  std::sort(g.dark_edges.begin(), g.dark_edges.end());
  std::sort(g.light_edges.begin(), g.light_edges.end());
  return g;
}

// A fundamentally unacceptable pair together with the shape it colours.
struct FundamentalPair {
  FundamentalPairShape shape;
  std::vector<LocalProfile> x, y;
};

inline std::vector<LocalProfile> profiles_of(const std::vector<Edge>& edges) {
  std::vector<LocalProfile> out;
  for (const Edge& e : edges) out.push_back(LocalProfile({e.a, e.b}));
  return out;
}

namespace detail {

using EdgeList = std::vector<Edge>;

inline std::pair<EdgeList, EdgeList> relabeled(const EdgeList& x, const EdgeList& y,
                                               const std::vector<int>& sigma) {
  EdgeList rx, ry;
  for (const Edge& e : x) rx.emplace_back(sigma[e.a], sigma[e.b]);
  for (const Edge& e : y) ry.emplace_back(sigma[e.a], sigma[e.b]);
  std::sort(rx.begin(), rx.end());
  std::sort(ry.begin(), ry.end());
  return {std::move(rx), std::move(ry)};
}

// Lexicographically least representative over relabelings and the colour
// swap; keeps catalogs deduplicated and stable.
inline std::pair<EdgeList, EdgeList> canonical_pair(const EdgeList& x, const EdgeList& y, int k) {
  std::vector<int> sigma(k + 1);
  for (int i = 1; i <= k; ++i) sigma[i] = i;
  std::optional<std::pair<EdgeList, EdgeList>> best;
  do {
    for (auto [rx, ry] : {relabeled(x, y, sigma), relabeled(y, x, sigma)}) {
      auto cand = std::make_pair(std::move(rx), std::move(ry));
      if (!best || cand < *best) best = std::move(cand);
    }
  } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
  return *best;
}

}  // namespace detail

/*
 * The fundamental-pair catalog: every fundamentally (k,2) unacceptable pair is a
 * good colouring of C_k (k > 2 even) or of Dum(a,b)_k with a,b even and
 * a+b < k; for k = 2 only Dum(0,0)_2 remains. Dumbbells are mirror-symmetric,
 * so a >= b suffices. Each emitted pair is re-verified from first principles:
 * it must be unacceptable, touch all k strategies, and every proper sub-pair
 * must be acceptable (checked over all sub-pairs when the edge count permits,
 * otherwise via single removals, which suffices because acceptability is
 * inherited by sub-pairs).
 */
inline std::vector<FundamentalPair> enumerate_fundamental_pairs(int k) {
  if (k < 2) throw std::invalid_argument("enumerate_fundamental_pairs requires k >= 2");

  std::vector<FundamentalPairShape> shapes;
  if (k == 2) {
    shapes.push_back(FundamentalPairShape::dumbbell(0, 0, 2));
  } else {
    if (k % 2 == 0) shapes.push_back(FundamentalPairShape::even_cycle(k));
    for (int a = 0; a < k; a += 2)
      for (int b = 0; b <= a && a + b < k; b += 2)
        shapes.push_back(FundamentalPairShape::dumbbell(a, b, k));
  }

  std::vector<FundamentalPair> out;
  for (const auto& shape : shapes) {
    BicoloredMultigraph g = good_colouring(shape);
    auto x = profiles_of(g.dark_edges);
    auto y = profiles_of(g.light_edges);

    if (static_cast<int>(g.vertices.size()) != k)
      throw std::logic_error("fundamental pair does not touch all strategies");
    if (!is_unacceptable_pair(x, y, k))
      throw std::logic_error("catalog shape is not unacceptable");

    const int nx = static_cast<int>(x.size()), ny = static_cast<int>(y.size());
    auto sub_ok = [&](const std::vector<LocalProfile>& sx, const std::vector<LocalProfile>& sy) {
      return !is_unacceptable_pair(sx, sy, k);
    };
    if (nx + ny <= 16) {
      for (int mx = 0; mx < (1 << nx); ++mx)
        for (int my = 0; my < (1 << ny); ++my) {
          if (mx == (1 << nx) - 1 && my == (1 << ny) - 1) continue;
          std::vector<LocalProfile> sx, sy;
          for (int i = 0; i < nx; ++i)
            if (mx & (1 << i)) sx.push_back(x[i]);
          for (int j = 0; j < ny; ++j)
            if (my & (1 << j)) sy.push_back(y[j]);
          if (!sub_ok(sx, sy)) throw std::logic_error("catalog pair is not minimal");
        }
    } else {
      for (int i = 0; i < nx; ++i) {
        auto sx = x;
        sx.erase(sx.begin() + i);
        if (!sub_ok(sx, y)) throw std::logic_error("catalog pair is not minimal");
      }
      for (int j = 0; j < ny; ++j) {
        auto sy = y;
        sy.erase(sy.begin() + j);
        if (!sub_ok(x, sy)) throw std::logic_error("catalog pair is not minimal");
      }
    }

    auto [cx, cy] = detail::canonical_pair(g.dark_edges, g.light_edges, k);
    out.push_back({shape, profiles_of(cx), profiles_of(cy)});
  }
  return out;
}

}  // namespace bra
