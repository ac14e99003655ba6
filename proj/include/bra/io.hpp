#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bra/circuits.hpp"
#include "bra/core.hpp"
#include "bra/enumeration.hpp"
#include "bra/errors.hpp"
#include "bra/geometry.hpp"
#include "bra/rational.hpp"

namespace bra {

using json = nlohmann::json;

inline json rule_to_json(const UpdateRule& f) {
  return json{{"k", f.k()}, {"d", f.d()}, {"outputs", f.outputs()}};
}

inline UpdateRule rule_from_json(const json& j) {
  int k, d;
  std::vector<Strategy> outputs;
  try {
    k = j.at("k").get<int>();
    d = j.at("d").get<int>();
    outputs = j.at("outputs").get<std::vector<Strategy>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad rule JSON: ") + e.what());
  }
  return UpdateRule(k, d, std::move(outputs));
}

// Compact one-line form, outputs in canonical profile order: "2 2 1".
inline std::string rule_to_string(const UpdateRule& f) {
  std::string out;
  for (Strategy s : f.outputs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s);
  }
  return out;
}

inline json graph_to_json(const RegularGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"n", g.n()}, {"d", g.degree()}, {"edges", edges}};
}

inline RegularGraph graph_from_json(const json& j) {
  int n, d;
  std::vector<std::pair<int, int>> edges;
  try {
    n = j.at("n").get<int>();
    d = j.at("d").get<int>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("bad graph JSON: edge is not a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
  return RegularGraph::from_edges(n, d, std::move(edges));
}

// Matrices carry exact entries, serialized as "p" or "p/q" strings.
inline json matrix_to_json(const PayoffMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const Rational& x : row) r.push_back(rational_to_string(x));
    rows.push_back(std::move(r));
  }
  return json{{"k", m.k}, {"entries", rows}};
}

inline PayoffMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Rational>> entries;
  try {
    int k = j.at("k").get<int>();
    for (const auto& row : j.at("entries")) {
      std::vector<Rational> r;
      for (const auto& cell : row) r.push_back(parse_rational(cell.get<std::string>()));
      entries.push_back(std::move(r));
    }
    if (static_cast<int>(entries.size()) != k)
      throw ParseError("bad matrix JSON: row count does not match k");
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what());
  }
  return PayoffMatrix(std::move(entries));
}

inline json rational_vector_to_json(const RationalVector& v) {
  json a = json::array();
  for (const Rational& x : v) a.push_back(rational_to_string(x));
  return a;
}

inline json witness_to_json(const HullIntersection& w) {
  json j{{"feasible", w.intersects}};
  if (w.intersects) {
    j["point"] = rational_vector_to_json(w.point.coords);
    j["lambda"] = rational_vector_to_json(w.lambda);
    j["mu"] = rational_vector_to_json(w.mu);
  }
  return j;
}

inline json census_to_json(const RuleCensus& c) {
  json reps = json::array();
  bool with_witnesses = false;
  for (const auto& r : c.representatives) {
    reps.push_back(rule_to_string(r.rule));
    if (r.witness) with_witnesses = true;
  }
  json j{{"k", c.k},
         {"d", c.d},
         {"non_identical", c.non_identical},
         {"classes", c.classes},
         {"representatives", reps}};
  json orbits = json::array();
  for (const auto& r : c.representatives) orbits.push_back(r.orbit_size);
  j["orbit_sizes"] = orbits;
  if (with_witnesses) {
    json ws = json::array();
    for (const auto& r : c.representatives)
      ws.push_back(r.witness ? matrix_to_json(*r.witness) : json());
    j["witnesses"] = ws;
  }
  return j;
}

inline json profiles_to_json(const std::vector<LocalProfile>& profiles) {
  json a = json::array();
  for (const auto& p : profiles) a.push_back(p.entries());
  return a;
}

inline json catalog_to_json(const std::vector<FundamentalPair>& pairs) {
  json a = json::array();
  for (const auto& p : pairs)
    a.push_back(json{{"k", p.shape.k},
                     {"shape", shape_name(p.shape)},
                     {"X", profiles_to_json(p.x)},
                     {"Y", profiles_to_json(p.y)}});
  return a;
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("cannot parse " + path + ": " + e.what());
  }
}

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw ParseError("cannot write " + path);
}

}  // namespace bra
