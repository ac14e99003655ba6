#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bra/core.hpp"
#include "bra/errors.hpp"

namespace bra {

// Orbit of a finite deterministic system: configs[0..transient+period] with
// configs[transient+period] == configs[transient]; period 0 means no repeat
// was found within the step budget and configs is just the prefix.
struct Trajectory {
  std::vector<Configuration> configs;
  int transient = 0;
  int period = 0;

  // Configuration at any time, unrolling the detected cycle.
  const Configuration& at(int t) const {
    if (t < 0) throw std::out_of_range("negative time");
    if (t < static_cast<int>(configs.size())) return configs[t];
    if (period <= 0) throw std::out_of_range("time beyond an undetected orbit");
    return configs[transient + (t - transient) % period];
  }
};

// Iterate the automaton until the first repeated configuration (exact
// hashing of full states) or until max_steps steps have been taken.
inline Trajectory run(const RegularGraph& g, const UpdateRule& f, Configuration c0, int max_steps) {
  if (static_cast<int>(c0.size()) != g.n())
    throw DimensionError("initial configuration size must equal vertex count");
  for (Strategy s : c0)
    if (s < 1 || s > f.k()) throw DimensionError("initial configuration state out of range");
  if (g.degree() != f.d()) throw DimensionError("graph degree must match rule degree");
  if (max_steps < 0) throw DimensionError("max_steps must be nonnegative");

  Trajectory tr;
  std::map<Configuration, int> seen;
  seen.emplace(c0, 0);
  tr.configs.push_back(std::move(c0));
  for (int t = 1; t <= max_steps; ++t) {
    Configuration next = step(g, tr.configs.back(), f);
    auto [it, inserted] = seen.emplace(next, t);
    tr.configs.push_back(std::move(next));
    if (!inserted) {
      tr.transient = it->second;
      tr.period = t - it->second;
      return tr;
    }
  }
  return tr;  // budget exhausted, period stays 0
}

enum class WolframMode { Circle, CircleWithSelf };

/*
 * Elementary-CA numbers of a binary rule on the circle: the bit for
 * neighborhood (a,b,c) has weight 2^(4a+2b+c). On the plain circle the
 * centre cell is not an input (d=2, F sees {left,right}); with self-linkage
 * it is (d=3). Both relabelings of {1,2} onto {0,1} are reported, since
 * either may be the natural one for a given rule.
 */
inline std::set<int> wolfram_numbers(const UpdateRule& f, WolframMode mode) {
  if (f.k() != 2) throw DimensionError("wolfram numbering requires k = 2");
  const int need = mode == WolframMode::Circle ? 2 : 3;
  if (f.d() != need)
    throw DimensionError("wolfram mode expects a degree-" + std::to_string(need) + " rule");

  std::set<int> out;
  for (int swap = 0; swap < 2; ++swap) {
    auto strat = [&](int bit) { return static_cast<Strategy>(swap ? 2 - bit : bit + 1); };
    auto bit_of = [&](Strategy s) { return swap ? 2 - s : s - 1; };
    int number = 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          std::vector<Strategy> inputs = mode == WolframMode::Circle
                                             ? std::vector<Strategy>{strat(a), strat(c)}
                                             : std::vector<Strategy>{strat(a), strat(b), strat(c)};
          Strategy s = f(LocalProfile(std::move(inputs)));
          number += bit_of(s) << (4 * a + 2 * b + c);
        }
    out.insert(number);
  }
  return out;
}

// Gray level per strategy, 1-based via gray[s-1]; must be injective.
struct Palette {
  std::vector<std::uint8_t> gray;
};

// Conventions of the figures: two strategies are light gray / dark gray,
// three are dark gray / white / light gray; beyond that, evenly spaced.
inline Palette default_palette(int k) {
  if (k < 1) throw DimensionError("palette requires k >= 1");
  if (k == 1) return {{192}};
  if (k == 2) return {{192, 64}};
  if (k == 3) return {{64, 255, 192}};
  Palette p;
  for (int i = 0; i < k; ++i)
    p.gray.push_back(static_cast<std::uint8_t>(255 - 255 * i / (k - 1)));
  return p;
}

enum class PlotFormat { Pgm, Svg };

/*
 * Space-time plot: x is the vertex index, y the time step reading downward,
 * one cell per vertex-state scaled by an integer factor. rows = 0 plots
 * exactly the stored configurations; a larger count unrolls the cycle via
 * Trajectory::at. Output is byte-deterministic.
 */
inline std::string render_spacetime(const Trajectory& tr, const Palette& palette,
                                    PlotFormat format, int scale = 1, int rows = 0) {
  if (tr.configs.empty()) throw std::invalid_argument("render_spacetime: empty trajectory");
  if (scale < 1) throw std::invalid_argument("render_spacetime: scale must be >= 1");
  if (rows == 0) rows = static_cast<int>(tr.configs.size());
  if (rows < 1) throw std::invalid_argument("render_spacetime: rows must be >= 1");
  const int n = static_cast<int>(tr.configs[0].size());
  std::set<std::uint8_t> uniq(palette.gray.begin(), palette.gray.end());
  if (uniq.size() != palette.gray.size())
    throw std::invalid_argument("render_spacetime: palette must be injective");
  for (int t = 0; t < rows; ++t)
    for (Strategy s : tr.at(t))
      if (s < 1 || s > static_cast<int>(palette.gray.size()))
        throw std::invalid_argument("render_spacetime: state without palette entry");

  const int w = n * scale, h = rows * scale;
  if (format == PlotFormat::Pgm) {
    std::string out = "P5 " + std::to_string(w) + " " + std::to_string(h) + " 255\n";
    out.reserve(out.size() + static_cast<std::size_t>(w) * h);
    for (int t = 0; t < rows; ++t) {
      const Configuration& row = tr.at(t);
      std::string line;
      for (Strategy s : row)
        line.append(scale, static_cast<char>(palette.gray[s - 1]));
      for (int r = 0; r < scale; ++r) out += line;
    }
    return out;
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" shape-rendering=\"crispEdges\">\n";
  static const char* hex = "0123456789abcdef";
  for (int t = 0; t < rows; ++t) {
    const Configuration& row = tr.at(t);
    for (int v = 0; v < n; ++v) {
      std::uint8_t g = palette.gray[row[v] - 1];
      char cc[3] = {hex[g >> 4], hex[g & 15], 0};
      svg << "<rect x=\"" << v * scale << "\" y=\"" << t * scale << "\" width=\"" << scale
          << "\" height=\"" << scale << "\" fill=\"#" << cc << cc << cc << "\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

// Seeded uniform configuration. States are drawn as gen() % k from a
// mt19937_64, whose output sequence is pinned by the standard, so the same
// seed gives the same configuration on every platform.
inline Configuration random_config(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw DimensionError("random_config requires n, k >= 1");
  std::mt19937_64 gen(seed);
  Configuration c(n);
  for (Strategy& s : c) s = static_cast<Strategy>(gen() % k) + 1;
  return c;
}

}  // namespace bra
