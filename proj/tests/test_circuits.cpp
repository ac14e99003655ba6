#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "bra/circuits.hpp"
#include "bra/geometry.hpp"

using namespace bra;

namespace {

std::vector<LocalProfile> profs(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<LocalProfile> out;
  for (auto [a, b] : pairs) out.push_back(LocalProfile({a, b}));
  return out;
}

BicoloredMultigraph swapped(const BicoloredMultigraph& g) {
  BicoloredMultigraph s = g;
  std::swap(s.dark_edges, s.light_edges);
  return s;
}

// Vertex-incidence count with loops counted twice.
int incidence(const BicoloredMultigraph& g, Strategy v) {
  int c = 0;
  for (const auto& edges : {g.dark_edges, g.light_edges})
    for (const Edge& e : edges) c += (e.a == v) + (e.b == v);
  return c;
}

}  // namespace

TEST_CASE("edges normalize their endpoints") {
  Edge e(3, 1);
  CHECK(e.a == 1);
  CHECK(e.b == 3);
  CHECK_FALSE(e.loop());
  CHECK(Edge(2, 2).loop());
  CHECK(edge_of(LocalProfile({2, 1})) == Edge(1, 2));
  CHECK_THROWS_AS(edge_of(LocalProfile({1, 2, 3})), DimensionError);
}

TEST_CASE("build_pair_graph lays out the classic pair") {
  auto g = build_pair_graph(profs({{1, 1}, {2, 2}}), profs({{1, 2}}));
  CHECK(g.vertices == std::vector<Strategy>{1, 2});
  CHECK(g.dark_edges == std::vector<Edge>{Edge(1, 1), Edge(2, 2)});
  CHECK(g.light_edges == std::vector<Edge>{Edge(1, 2)});
}

TEST_CASE("build_pair_graph tolerates an empty side") {
  auto g = build_pair_graph(profs({{1, 2}}), {});
  CHECK(g.vertices == std::vector<Strategy>{1, 2});
  CHECK(g.dark_edges.size() == 1);
  CHECK(g.light_edges.empty());
}

TEST_CASE("build_pair_graph lays out the mixed three-strategy pair") {
  auto g = build_pair_graph(profs({{1, 2}, {2, 3}}), profs({{2, 2}, {1, 3}}));
  CHECK(g.vertices == std::vector<Strategy>{1, 2, 3});
  CHECK(g.dark_edges == std::vector<Edge>{Edge(1, 2), Edge(2, 3)});
  CHECK(g.light_edges == std::vector<Edge>{Edge(1, 3), Edge(2, 2)});
  CHECK(incidence(g, 2) == 4);  // the self-loop counts twice
}

TEST_CASE("build_pair_graph rejects overlapping sides") {
  CHECK_THROWS_AS(build_pair_graph(profs({{1, 2}}), profs({{1, 2}})), std::invalid_argument);
}

TEST_CASE("alternating cycles exist exactly where expected") {
  CHECK(has_alternating_cycle(build_pair_graph(profs({{1, 1}, {2, 2}}), profs({{1, 2}}))));
  CHECK_FALSE(has_alternating_cycle(build_pair_graph(profs({{1, 2}}), {})));
  // The alternating square.
  CHECK(has_alternating_cycle(
      build_pair_graph(profs({{1, 2}, {3, 4}}), profs({{2, 3}, {1, 4}}))));
  // A single loop plus pendant edge cannot close with opposite colours.
  CHECK_FALSE(has_alternating_cycle(build_pair_graph(profs({{1, 1}}), profs({{1, 2}}))));
}

TEST_CASE("alternating walks returned as witnesses are valid") {
  auto g = build_pair_graph(profs({{1, 1}, {2, 2}}), profs({{1, 2}}));
  auto walk = find_alternating_cycle(g);
  REQUIRE(walk.has_value());
  const auto& steps = walk->steps;
  REQUIRE(steps.size() >= 2);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& cur = steps[i];
    const auto& nxt = steps[(i + 1) % steps.size()];
    CHECK(cur.to == nxt.from);
    CHECK(cur.colour != nxt.colour);
  }
}

TEST_CASE("purely linear graphs never have alternating cycles") {
  // Paths of every colour pattern on up to five vertices.
  CHECK_FALSE(is_unacceptable_pair(profs({{1, 2}}), profs({{2, 3}}), 3));
  CHECK_FALSE(is_unacceptable_pair(profs({{1, 2}}), profs({{1, 3}}), 3));
  CHECK_FALSE(is_unacceptable_pair(profs({{1, 2}, {3, 4}}), profs({{2, 3}, {4, 5}}), 5));
  CHECK_FALSE(is_unacceptable_pair(profs({{1, 2}, {2, 3}, {3, 4}}), profs({{4, 5}}), 5));
}

TEST_CASE("is_unacceptable_pair matches the documented verdicts") {
  CHECK(is_unacceptable_pair(profs({{2, 2}, {1, 3}}), profs({{3, 3}, {1, 2}}), 3));
  CHECK_FALSE(is_unacceptable_pair(profs({{1, 1}}), profs({{2, 2}}), 3));
  CHECK_THROWS_AS(is_unacceptable_pair(profs({{1, 4}}), profs({{1, 2}}), 3), DimensionError);
}

TEST_CASE("unacceptability is symmetric under colour swap") {
  std::vector<std::pair<std::vector<LocalProfile>, std::vector<LocalProfile>>> cases{
      {profs({{2, 2}, {1, 3}}), profs({{3, 3}, {1, 2}})},
      {profs({{1, 1}, {2, 2}}), profs({{1, 2}})},
      {profs({{1, 2}}), profs({{2, 3}})},
      {profs({{1, 2}, {2, 3}}), profs({{2, 2}, {1, 3}})}};
  for (const auto& [x, y] : cases) {
    CHECK(is_unacceptable_pair(x, y, 3) == is_unacceptable_pair(y, x, 3));
    auto g = build_pair_graph(x, y);
    CHECK(has_alternating_cycle(g) == has_alternating_cycle(swapped(g)));
  }
}

TEST_CASE("circuit verdicts agree with hull verdicts on a three-strategy sweep") {
  // Exhaustive oracle identity over all disjoint pairs lives in the
  // acceptance suite; spot-check the full sweep for pairs up to two
  // profiles per side here.
  auto all = canonical_profiles(3, 2);
  const int n = static_cast<int>(all.size());
  int checked = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int i2 = -1; i2 < n; ++i2)
        for (int j2 = -1; j2 < n; ++j2) {
          std::vector<LocalProfile> x{all[i]}, y{all[j]};
          if (i2 >= 0 && i2 != i && i2 != j) x.push_back(all[i2]);
          if (j2 >= 0 && j2 != j && j2 != i && j2 != i2) y.push_back(all[j2]);
          bool circuit = is_unacceptable_pair(x, y, 3);
          bool geometric = hulls_intersect(x, y, 3).intersects;
          REQUIRE(circuit == geometric);
          ++checked;
        }
    }
  CHECK(checked > 500);
}

TEST_CASE("shape names are stable") {
  CHECK(shape_name(FundamentalPairShape::even_cycle(4)) == "C_4");
  CHECK(shape_name(FundamentalPairShape::dumbbell(2, 0, 3)) == "Dum(2,0)_3");
}

TEST_CASE("good colourings satisfy their defining vertex conditions") {
  for (const auto& shape :
       {FundamentalPairShape::dumbbell(0, 0, 2), FundamentalPairShape::dumbbell(0, 0, 3),
        FundamentalPairShape::dumbbell(2, 0, 3), FundamentalPairShape::even_cycle(4),
        FundamentalPairShape::dumbbell(2, 2, 5), FundamentalPairShape::even_cycle(6),
        FundamentalPairShape::dumbbell(4, 0, 6)}) {
    auto g = good_colouring(shape);
    CHECK(static_cast<int>(g.vertices.size()) == shape.k);
    for (Strategy v : g.vertices) {
      int dark = 0, light = 0;
      for (const Edge& e : g.dark_edges) dark += (e.a == v) + (e.b == v);
      for (const Edge& e : g.light_edges) light += (e.a == v) + (e.b == v);
      if (dark + light == 2) {
        // Degree-2 vertices (loops counted twice) see both colours unless
        // the whole vertex is a single loop, which cannot happen here.
        CHECK(dark == 1);
        CHECK(light == 1);
      }
    }
  }
}

TEST_CASE("good colouring of the two-vertex dumbbell is the classic pair") {
  auto g = good_colouring(FundamentalPairShape::dumbbell(0, 0, 2));
  CHECK(g.dark_edges == std::vector<Edge>{Edge(1, 1), Edge(2, 2)});
  CHECK(g.light_edges == std::vector<Edge>{Edge(1, 2)});
}

TEST_CASE("good colouring of the even cycle alternates") {
  auto g = good_colouring(FundamentalPairShape::even_cycle(4));
  CHECK(g.dark_edges.size() == 2);
  CHECK(g.light_edges.size() == 2);
  for (const Edge& e : g.dark_edges)
    CHECK(std::find(g.light_edges.begin(), g.light_edges.end(), e) == g.light_edges.end());
  CHECK(has_alternating_cycle(g));
}

TEST_CASE("good colouring rejects invalid shape parameters") {
  CHECK_THROWS_AS(good_colouring(FundamentalPairShape::even_cycle(5)), std::invalid_argument);
  CHECK_THROWS_AS(good_colouring(FundamentalPairShape::dumbbell(1, 0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(good_colouring(FundamentalPairShape::dumbbell(2, 2, 4)), std::invalid_argument);
}

TEST_CASE("catalog sizes follow the shape sweep") {
  CHECK(enumerate_fundamental_pairs(2).size() == 1);
  CHECK(enumerate_fundamental_pairs(3).size() == 2);
  CHECK(enumerate_fundamental_pairs(4).size() == 3);
  CHECK(enumerate_fundamental_pairs(5).size() == 4);
  CHECK(enumerate_fundamental_pairs(6).size() == 5);
  CHECK_THROWS_AS(enumerate_fundamental_pairs(1), std::invalid_argument);
}

TEST_CASE("the three-strategy catalog matches the two known pairs") {
  auto catalog = enumerate_fundamental_pairs(3);
  REQUIRE(catalog.size() == 2);

  auto canon = [&](const std::vector<LocalProfile>& x, const std::vector<LocalProfile>& y) {
    std::vector<Edge> ex, ey;
    for (const auto& p : x) ex.push_back(edge_of(p));
    for (const auto& p : y) ey.push_back(edge_of(p));
    return detail::canonical_pair(ex, ey, 3);
  };

  std::set<std::pair<detail::EdgeList, detail::EdgeList>> got, want;
  for (const auto& fp : catalog) got.insert(canon(fp.x, fp.y));
  want.insert(canon(profs({{2, 2}, {1, 3}}), profs({{3, 3}, {1, 2}})));
  want.insert(canon(profs({{1, 2}, {2, 3}}), profs({{2, 2}, {1, 3}})));
  CHECK(got == want);
}

TEST_CASE("every catalog pair is unacceptable and minimal") {
  for (int k = 2; k <= 5; ++k) {
    for (const auto& fp : enumerate_fundamental_pairs(k)) {
      CHECK(is_unacceptable_pair(fp.x, fp.y, k));
      for (std::size_t i = 0; i < fp.x.size(); ++i) {
        auto sx = fp.x;
        sx.erase(sx.begin() + i);
        CHECK_FALSE(is_unacceptable_pair(sx, fp.y, k));
      }
      for (std::size_t j = 0; j < fp.y.size(); ++j) {
        auto sy = fp.y;
        sy.erase(sy.begin() + j);
        CHECK_FALSE(is_unacceptable_pair(fp.x, sy, k));
      }
    }
  }
}
