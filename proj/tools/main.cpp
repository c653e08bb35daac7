// grincycles: cycle-space toolkit around the Grinberg equation, removable
// cycles, and an exact Hamiltonicity oracle.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 internal failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "grin/catalog.hpp"
#include "grin/corpus.hpp"
#include "grin/cycle_basis.hpp"
#include "grin/decision.hpp"
#include "grin/graph6.hpp"
#include "grin/mcb.hpp"

namespace {

// Graph arguments: "name:<catalog>" or a file path. Files ending in ".g6"
// (or starting with the ">>graph6<<" header) hold one graph6 record per
// line and the first record is used; anything else is edge-list text.
grin::Graph load_graph_argument(const std::string& arg) {
  if (arg.rfind("name:", 0) == 0) return grin::named_graph(arg.substr(5));

  std::ifstream in(arg);
  if (!in) grin::fail(grin::ErrorCode::IoError, "cannot open '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  bool graph6 = arg.size() >= 3 && arg.compare(arg.size() - 3, 3, ".g6") == 0;
  if (text.rfind(">>graph6<<", 0) == 0) graph6 = true;
  if (!graph6) return grin::parse_edge_list(text);

  auto graphs = grin::load_graph6_file(arg);
  if (graphs.empty()) grin::fail(grin::ErrorCode::MalformedGraph6, "no records in '" + arg + "'");
  return graphs.front();
}

struct PoolFlag {
  std::string value = "mcb";

  void apply(grin::SolutionConfig& cfg) const {
    if (value == "mcb") {
      cfg.pool_kind = grin::PoolKind::Mcb;
    } else if (value == "fundamental") {
      cfg.pool_kind = grin::PoolKind::FundamentalBasis;
    } else if (value == "all") {
      cfg.pool_kind = grin::PoolKind::AllCyclesUpTo;
      cfg.all_cycles_bound = 0;
    } else if (value.rfind("all:", 0) == 0) {
      cfg.pool_kind = grin::PoolKind::AllCyclesUpTo;
      cfg.all_cycles_bound = std::stoi(value.substr(4));
    } else {
      grin::fail(grin::ErrorCode::InvalidArgument, "unknown pool '" + value + "'");
    }
  }
};

void write_or_print(const std::string& content, const std::string& report_path) {
  if (report_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(report_path, std::ios::binary);
  if (!out) grin::fail(grin::ErrorCode::IoError, "cannot write '" + report_path + "'");
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle-space toolkit: Grinberg equation, removable cycles, Hamiltonicity"};
  app.require_subcommand(1);

  std::string graph_arg, report_path, format = "text", spec_path, name_arg;
  PoolFlag pool;
  int max_solutions = 10000;
  std::uint64_t oracle_budget = 10'000'000;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd, bool with_pool) {
    cmd->add_option("--report", report_path, "write output to this file instead of stdout");
    cmd->add_option("--format", format, "output format: structured|text")
        ->check(CLI::IsMember({"structured", "text"}));
    if (with_pool) {
      cmd->add_option("--pool", pool.value, "cycle pool: mcb|fundamental|all:<L>");
      cmd->add_option("--max-solutions", max_solutions, "cap on enumerated solutions");
    }
  };

  CLI::App* mcb = app.add_subcommand("mcb", "minimum cycle basis and its weight");
  mcb->add_option("graph", graph_arg, "edge-list path, graph6 path, or name:<catalog>")->required();
  add_common(mcb, false);

  CLI::App* solve = app.add_subcommand("solve", "Grinberg-equation solutions over a cycle pool");
  solve->add_option("graph", graph_arg)->required();
  add_common(solve, true);

  CLI::App* dec = app.add_subcommand("decide", "criterion verdict with trace");
  dec->add_option("graph", graph_arg)->required();
  add_common(dec, true);

  CLI::App* oracle = app.add_subcommand("oracle", "exact Hamiltonicity search");
  oracle->add_option("graph", graph_arg)->required();
  oracle->add_option("--oracle-budget", oracle_budget, "search-node cap (0 = unlimited)");
  add_common(oracle, false);

  CLI::App* named = app.add_subcommand("named", "emit a catalog graph");
  named->add_option("name", name_arg, "k4|k5|cycle(n)|wheel(n)|fan(n)|petersen|herschel|tutte")
      ->required();
  add_common(named, false);

  CLI::App* corpus = app.add_subcommand("corpus", "evaluate a corpus against the oracle");
  corpus->add_option("spec", spec_path, "corpus spec JSON file")->required();
  corpus->add_option("--oracle-budget", oracle_budget, "search-node cap for n > 12 rows");
  corpus->add_option("--seed", seed, "seed override for gnp sources");
  add_common(corpus, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*mcb) {
      grin::Graph g = load_graph_argument(graph_arg);
      grin::CycleBasis basis = grin::horton_mcb(g);
      if (format == "structured") {
        nlohmann::json cycles = nlohmann::json::array();
        for (const auto& c : basis.cycles) cycles.push_back(c.walk);
        nlohmann::json j{{"cycles", cycles}, {"total_weight", grin::total_weight(basis)}};
        write_or_print(j.dump(2) + "\n", report_path);
      } else {
        std::ostringstream out;
        out << grin::basis_to_text(basis);
        out << "# total weight " << grin::total_weight(basis) << "\n";
        write_or_print(out.str(), report_path);
      }
    } else if (*solve) {
      grin::Graph g = load_graph_argument(graph_arg);
      grin::SolutionConfig cfg;
      pool.apply(cfg);
      cfg.max_solutions = max_solutions;
      std::vector<grin::Cycle> cycles = grin::build_pool(g, cfg);
      grin::SolutionSet sols =
          grin::enumerate_solutions(cycles, g.n(), cfg, grin::pool_id(cfg, g.n()));
      if (format == "structured") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : sols.solutions) arr.push_back(grin::solution_to_json(s, cycles, g.n()));
        nlohmann::json j{{"pool", grin::pool_id(cfg, g.n())},
                         {"pool_size", cycles.size()},
                         {"solutions", arr},
                         {"truncated", sols.truncated}};
        write_or_print(j.dump(2) + "\n", report_path);
      } else {
        std::ostringstream out;
        out << "pool " << grin::pool_id(cfg, g.n()) << " size " << cycles.size() << ", target "
            << g.n() - 2 << "\n";
        for (const auto& s : sols.solutions) {
          out << "solution:";
          for (int i : s.solution) out << ' ' << i;
          out << " | complement:";
          for (int i : s.complement) out << ' ' << i;
          out << "\n";
        }
        if (sols.truncated) out << "(truncated at " << cfg.max_solutions << ")\n";
        if (sols.solutions.empty()) out << "no solution\n";
        write_or_print(out.str(), report_path);
      }
    } else if (*dec) {
      grin::Graph g = load_graph_argument(graph_arg);
      grin::SolutionConfig cfg;
      pool.apply(cfg);
      cfg.max_solutions = max_solutions;
      grin::DecideResult r = grin::decide(g, cfg);
      if (format == "structured") {
        nlohmann::json j{{"verdict", grin::to_json(r.verdict)}, {"trace", grin::to_json(r.trace)}};
        write_or_print(j.dump(2) + "\n", report_path);
      } else {
        std::ostringstream out;
        out << "verdict: " << grin::to_string(r.verdict.outcome);
        if (r.verdict.outcome == grin::Outcome::NonHamiltonian)
          out << " (" << grin::to_string(r.verdict.reason) << ")";
        out << "\n";
        if (r.verdict.certificate) {
          out << "certificate:";
          for (int v : r.verdict.certificate->walk) out << ' ' << v;
          out << "\n";
        }
        out << "pool " << r.trace.pool_id << " size " << r.trace.pool_walks.size()
            << ", solutions " << r.trace.solution_count
            << (r.trace.solutions_truncated ? " (truncated)" : "") << ", attempts "
            << r.trace.attempts.size() << "\n";
        write_or_print(out.str(), report_path);
      }
    } else if (*oracle) {
      grin::Graph g = load_graph_argument(graph_arg);
      grin::OracleResult r = grin::oracle_hamiltonian(g, oracle_budget);
      if (format == "structured") {
        nlohmann::json j{{"status", grin::to_string(r.status)}, {"nodes", r.nodes}};
        if (r.certificate) j["certificate"] = r.certificate->walk;
        write_or_print(j.dump(2) + "\n", report_path);
      } else {
        std::ostringstream out;
        out << grin::to_string(r.status) << " (" << r.nodes << " nodes)\n";
        if (r.certificate) {
          out << "certificate:";
          for (int v : r.certificate->walk) out << ' ' << v;
          out << "\n";
        }
        write_or_print(out.str(), report_path);
      }
    } else if (*named) {
      grin::Graph g = grin::named_graph(name_arg);
      if (format == "structured") {
        nlohmann::json j{{"name", name_arg},
                         {"graph6", grin::encode_graph6(g)},
                         {"n", g.n()},
                         {"m", g.m()}};
        write_or_print(j.dump(2) + "\n", report_path);
      } else {
        write_or_print(grin::encode_graph6(g) + "\n", report_path);
      }
    } else if (*corpus) {
      grin::CorpusSpec spec = grin::load_corpus_spec(spec_path);
      if (corpus->count("--oracle-budget")) spec.oracle_budget = oracle_budget;
      if (corpus->count("--seed")) spec.seed = seed;
      if (corpus->count("--pool")) {
        pool.apply(spec.decision);
      }
      if (corpus->count("--max-solutions")) spec.decision.max_solutions = max_solutions;
      grin::Report report = grin::run_corpus(spec);
      std::string content = format == "structured" ? report_to_json(report).dump(2) + "\n"
                                                   : report_to_text(report);
      write_or_print(content, report_path);
    }
  } catch (const grin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return grin::is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
