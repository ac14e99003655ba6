#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bra/circuits.hpp"
#include "bra/core.hpp"
#include "bra/enumeration.hpp"
#include "bra/errors.hpp"
#include "bra/geometry.hpp"
#include "bra/io.hpp"
#include "bra/simulate.hpp"

namespace {

void emit(const bra::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    bra::save_text(out_path, j.dump(2) + "\n");
}

bra::Configuration parse_init(const std::string& text, int k) {
  bra::Configuration c;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      c.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw bra::ParseError("bad --init entry '" + token + "'");
    }
  }
  if (c.empty()) throw bra::ParseError("--init must list at least one state");
  for (bra::Strategy s : c)
    if (s < 1 || s > k) throw bra::ParseError("--init state out of range 1..k");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"best response games as regular automata: classify, synthesize, census, simulate"};
  app.require_subcommand(1);

  std::string rule_path, graph_path, out_path, plot_path, init_text, mode = "circle",
              format = "pgm";
  int k = 3, d = 2, steps = 100, scale = 1, jobs = 1, circle_n = 0, circle_self_n = 0;
  std::uint64_t seed = 0;
  bool witness = false, have_seed = false;

  auto* classify = app.add_subcommand("classify", "is a rule the best response rule of a game?");
  classify->add_option("rule", rule_path, "rule JSON file")->required();
  classify->add_option("-o,--out", out_path, "output file (default stdout)");
  classify->callback([&] {
    bra::UpdateRule f = bra::rule_from_json(bra::load_json(rule_path));
    bra::RulePartition p = bra::partition_of(f);
    bra::json j{{"k", f.k()}, {"d", f.d()}, {"realizable", true}};
    bool realizable = true;
    for (int i = 0; i < p.k && realizable; ++i) {
      if (p.cells[i].empty()) continue;
      for (int jj = i + 1; jj < p.k && realizable; ++jj) {
        if (p.cells[jj].empty()) continue;
        bool bad = f.d() == 2 ? bra::is_unacceptable_pair(p.cells[i], p.cells[jj], p.k)
                              : bra::hulls_intersect(p.cells[i], p.cells[jj], p.k).intersects;
        if (bad) {
          realizable = false;
          j["realizable"] = false;
          j["violating_pair"] = {i + 1, jj + 1};
        }
      }
    }
    emit(j, out_path);
  });

  auto* synthesize = app.add_subcommand("synthesize", "find a payoff matrix inducing a rule");
  synthesize->add_option("rule", rule_path, "rule JSON file")->required();
  synthesize->add_option("-o,--out", out_path, "output file (default stdout)");
  synthesize->callback([&] {
    bra::UpdateRule f = bra::rule_from_json(bra::load_json(rule_path));
    emit(bra::matrix_to_json(bra::synthesize_matrix(f)), out_path);
  });

  auto* census = app.add_subcommand("census", "count realizable rules up to relabeling");
  census->add_option("--k", k, "strategy count")->required();
  census->add_option("--d", d, "degree")->required();
  census->add_flag("--witness", witness, "synthesize a payoff matrix per class");
  census->add_option("--jobs", jobs, "worker threads")->envname("BR_AUTOMATA_JOBS");
  census->add_option("-o,--out", out_path, "output file (default stdout)");
  census->callback([&] {
    bra::CensusOptions options;
    options.jobs = jobs;
    options.witnesses = witness;
    emit(bra::census_to_json(bra::census(k, d, options)), out_path);
  });

  auto* simulate = app.add_subcommand("simulate", "evolve a rule on a graph");
  simulate->add_option("--rule", rule_path, "rule JSON file")->required();
  simulate->add_option("--graph", graph_path, "graph JSON file");
  simulate->add_option("--circle", circle_n, "use the circle C_n");
  simulate->add_option("--circle-self", circle_self_n, "use C_n with self-linkage");
  simulate->add_option("--seed", seed, "random initial configuration seed");
  simulate->add_option("--init", init_text, "explicit initial configuration, e.g. 1,2,1,2");
  simulate->add_option("--steps", steps, "step budget and plot depth");
  simulate->add_option("--plot", plot_path, "write a space-time plot here");
  simulate->add_option("--scale", scale, "integer cell size for plots");
  simulate->add_option("--format", format, "plot format: pgm or svg")
      ->check(CLI::IsMember({"pgm", "svg"}));
  simulate->callback([&] {
    have_seed = simulate->count("--seed") > 0;
    int sources = (graph_path.empty() ? 0 : 1) + (circle_n > 0) + (circle_self_n > 0);
    if (sources != 1)
      throw CLI::ValidationError("simulate", "give exactly one of --graph, --circle, --circle-self");
    if (have_seed == !init_text.empty())
      throw CLI::ValidationError("simulate", "give exactly one of --seed, --init");

    bra::UpdateRule f = bra::rule_from_json(bra::load_json(rule_path));
    bra::RegularGraph g = !graph_path.empty() ? bra::graph_from_json(bra::load_json(graph_path))
                          : circle_n > 0     ? bra::RegularGraph::circle(circle_n)
                                             : bra::RegularGraph::circle_with_self(circle_self_n);
    bra::Configuration c0 = have_seed ? bra::random_config(g.n(), f.k(), seed)
                                      : parse_init(init_text, f.k());
    bra::Trajectory tr = bra::run(g, f, std::move(c0), steps);
    bra::json j{{"n", g.n()},       {"k", f.k()},           {"steps", steps},
                {"transient", tr.transient}, {"period", tr.period}};
    if (!plot_path.empty()) {
      auto fmt = format == "svg" ? bra::PlotFormat::Svg : bra::PlotFormat::Pgm;
      bra::save_text(plot_path,
                     bra::render_spacetime(tr, bra::default_palette(f.k()), fmt, scale, steps + 1));
      j["plot"] = plot_path;
    }
    emit(j, out_path);
  });

  auto* catalog = app.add_subcommand("catalog", "fundamentally unacceptable pairs for degree 2");
  catalog->add_option("--k", k, "strategy count")->required();
  catalog->add_option("-o,--out", out_path, "output file (default stdout)");
  catalog->callback(
      [&] { emit(bra::catalog_to_json(bra::enumerate_fundamental_pairs(k)), out_path); });

  auto* wolfram = app.add_subcommand("wolfram", "elementary CA numbers of a binary rule");
  wolfram->add_option("rule", rule_path, "rule JSON file")->required();
  wolfram->add_option("--mode", mode, "circle or circle-self")
      ->check(CLI::IsMember({"circle", "circle-self"}));
  wolfram->add_option("-o,--out", out_path, "output file (default stdout)");
  wolfram->callback([&] {
    bra::UpdateRule f = bra::rule_from_json(bra::load_json(rule_path));
    auto numbers = bra::wolfram_numbers(
        f, mode == "circle" ? bra::WolframMode::Circle : bra::WolframMode::CircleWithSelf);
    emit(bra::json{{"mode", mode}, {"numbers", numbers}}, out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << bra::json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const bra::InfeasibleError& e) {
    std::cerr << bra::json{{"error", "infeasible"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const bra::TieError& e) {
    std::cerr << bra::json{{"error", "tie"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const bra::ParseError& e) {
    std::cerr << bra::json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << bra::json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
