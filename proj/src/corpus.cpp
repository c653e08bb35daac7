#include "grin/corpus.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "grin/catalog.hpp"
#include "grin/generate.hpp"
#include "grin/graph6.hpp"

namespace grin {

namespace {

PoolKind pool_kind_from_string(const std::string& s, int& bound) {
  bound = 0;
  if (s == "mcb") return PoolKind::Mcb;
  if (s == "fundamental") return PoolKind::FundamentalBasis;
  if (s == "all") return PoolKind::AllCyclesUpTo;
  if (s.rfind("all:", 0) == 0) {
    bound = std::stoi(s.substr(4));
    return PoolKind::AllCyclesUpTo;
  }
  fail(ErrorCode::InvalidArgument, "unknown pool '" + s + "'");
}

}  // namespace

CorpusSpec parse_corpus_spec(const nlohmann::json& j) {
  CorpusSpec spec;
  if (!j.contains("source") || !j["source"].contains("kind"))
    fail(ErrorCode::InvalidArgument, "corpus spec needs source.kind");
  const auto& src = j["source"];
  std::string kind = src["kind"].get<std::string>();
  if (kind == "named") {
    spec.source = CorpusSpec::Source::Named;
    spec.names = src.at("names").get<std::vector<std::string>>();
  } else if (kind == "gnp") {
    spec.source = CorpusSpec::Source::Gnp;
    spec.n = src.at("n").get<int>();
    spec.p = src.at("p").get<double>();
    spec.seed = src.value("seed", std::uint64_t{1});
    spec.count = src.at("count").get<int>();
  } else if (kind == "exhaustive") {
    spec.source = CorpusSpec::Source::ExhaustiveLabeled;
    spec.n = src.at("n").get<int>();
    spec.connected_only = src.value("connected_only", true);
  } else if (kind == "file") {
    spec.source = CorpusSpec::Source::File;
    spec.path = src.at("path").get<std::string>();
    spec.format = src.value("format", std::string("graph6"));
  } else {
    fail(ErrorCode::InvalidArgument, "unknown source kind '" + kind + "'");
  }

  if (j.contains("pool")) {
    int bound = 0;
    spec.decision.pool_kind = pool_kind_from_string(j["pool"].get<std::string>(), bound);
    spec.decision.all_cycles_bound = bound;
  }
  spec.decision.max_solutions = j.value("max_solutions", spec.decision.max_solutions);
  spec.oracle_budget = j.value("oracle_budget", spec.oracle_budget);
  return spec;
}

CorpusSpec load_corpus_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, "corpus spec is not valid JSON: " + std::string(e.what()));
  }
  return parse_corpus_spec(j);
}

namespace {

// Uniform handle over the four sources; exhaustive corpora stay as masks so
// a 2-million-graph sweep never materializes all graphs at once.
struct CorpusItems {
  std::vector<Graph> graphs;
  std::vector<std::uint64_t> masks;
  int mask_n = 0;

  std::size_t size() const { return graphs.empty() ? masks.size() : graphs.size(); }
  Graph get(std::size_t i) const {
    return graphs.empty() ? graph_from_mask(mask_n, masks[i]) : graphs[i];
  }
};

CorpusItems resolve_items(const CorpusSpec& spec) {
  CorpusItems items;
  switch (spec.source) {
    case CorpusSpec::Source::Named:
      for (const std::string& name : spec.names) items.graphs.push_back(named_graph(name));
      break;
    case CorpusSpec::Source::Gnp:
      for (int i = 0; i < spec.count; ++i)
        items.graphs.push_back(generate_gnp(spec.n, spec.p, spec.seed + static_cast<std::uint64_t>(i)));
      break;
    case CorpusSpec::Source::ExhaustiveLabeled:
      items.mask_n = spec.n;
      enumerate_labeled_graphs(spec.n, spec.connected_only,
                               [&](const Graph&, std::uint64_t mask) { items.masks.push_back(mask); });
      break;
    case CorpusSpec::Source::File:
      if (spec.format == "graph6") {
        items.graphs = load_graph6_file(spec.path);
      } else if (spec.format == "edgelist") {
        items.graphs.push_back(load_edge_list_file(spec.path));
      } else {
        fail(ErrorCode::InvalidArgument, "unknown file format '" + spec.format + "'");
      }
      break;
  }
  return items;
}

ReportRow evaluate_row(const Graph& g, const CorpusSpec& spec) {
  ReportRow row;
  row.graph6 = encode_graph6(g);
  row.n = g.n();
  row.m = g.m();

  auto t0 = std::chrono::steady_clock::now();
  DecideResult decided = decide(g, spec.decision);
  auto t1 = std::chrono::steady_clock::now();
  // Ground truth at n <= 12 is always exhaustive so timeouts can never
  // masquerade as verdicts.
  std::uint64_t budget = g.n() <= 12 ? 0 : spec.oracle_budget;
  OracleResult oracle = oracle_hamiltonian(g, budget);
  auto t2 = std::chrono::steady_clock::now();

  row.outcome = decided.verdict.outcome;
  row.reason = decided.verdict.reason;
  row.oracle = oracle.status;
  row.solutions_truncated = decided.trace.solutions_truncated;
  row.decide_us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  row.oracle_us = std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count();

  if (row.outcome == Outcome::Hamiltonian)
    row.certificate_ok =
        decided.verdict.certificate && verify_certificate(g, *decided.verdict.certificate);

  if (oracle.status == OracleResult::Status::BudgetExceeded ||
      row.outcome == Outcome::ClaimedHamiltonianUnverified) {
    row.agreement = -1;
  } else {
    bool oracle_h = oracle.status == OracleResult::Status::Hamiltonian;
    bool crit_h = row.outcome == Outcome::Hamiltonian;
    row.agreement = (oracle_h == crit_h) ? 1 : 0;
  }
  return row;
}

Report assemble(const CorpusSpec& spec, std::vector<ReportRow> rows) {
  Report report;
  report.pool_id = pool_id(spec.decision, spec.n);
  report.oracle_budget = spec.oracle_budget;
  report.rows = std::move(rows);
  for (const ReportRow& row : report.rows) {
    if (row.oracle == OracleResult::Status::BudgetExceeded) {
      ++report.matrix.budget_exceeded;
      continue;
    }
    if (row.outcome == Outcome::ClaimedHamiltonianUnverified) {
      ++report.matrix.unverified_claims;
      report.unverified.push_back(row.graph6);
      continue;
    }
    bool oracle_h = row.oracle == OracleResult::Status::Hamiltonian;
    bool crit_h = row.outcome == Outcome::Hamiltonian;
    if (crit_h && oracle_h) ++report.matrix.criterion_h_oracle_h;
    if (crit_h && !oracle_h) ++report.matrix.criterion_h_oracle_nh;
    if (!crit_h && oracle_h) ++report.matrix.criterion_nh_oracle_h;
    if (!crit_h && !oracle_h) ++report.matrix.criterion_nh_oracle_nh;
    if (row.agreement == 0) report.mismatches.push_back(row.graph6);
    if (oracle_h && row.reason == NonHamReason::NoSolution) ++report.hamiltonian_no_solution;
  }
  return report;
}

Report run(const CorpusSpec& spec, bool parallel) {
  CorpusItems items = resolve_items(spec);
  std::vector<ReportRow> rows(items.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(items.size()); ++i)
      rows[static_cast<std::size_t>(i)] = evaluate_row(items.get(static_cast<std::size_t>(i)), spec);
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) rows[i] = evaluate_row(items.get(i), spec);
  }
  return assemble(spec, std::move(rows));
}

}  // namespace

Report run_corpus(const CorpusSpec& spec) { return run(spec, true); }

Report run_corpus_serial(const CorpusSpec& spec) { return run(spec, false); }

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& r : report.rows) {
    rows.push_back({{"graph6", r.graph6},
                    {"n", r.n},
                    {"m", r.m},
                    {"verdict", to_string(r.outcome)},
                    {"reason", to_string(r.reason)},
                    {"oracle", to_string(r.oracle)},
                    {"agreement", r.agreement},
                    {"solutions_truncated", r.solutions_truncated},
                    {"certificate_ok", r.certificate_ok},
                    {"decide_us", r.decide_us},
                    {"oracle_us", r.oracle_us}});
  }
  return nlohmann::json{
      {"schema_version", 1},
      {"pool", report.pool_id},
      {"oracle_budget", report.oracle_budget},
      {"corpus_size", report.rows.size()},
      {"rows", rows},
      {"matrix",
       {{"criterion_h_oracle_h", report.matrix.criterion_h_oracle_h},
        {"criterion_h_oracle_nh", report.matrix.criterion_h_oracle_nh},
        {"criterion_nh_oracle_h", report.matrix.criterion_nh_oracle_h},
        {"criterion_nh_oracle_nh", report.matrix.criterion_nh_oracle_nh},
        {"unverified_claims", report.matrix.unverified_claims},
        {"budget_exceeded", report.matrix.budget_exceeded}}},
      {"mismatches", report.mismatches},
      {"unverified", report.unverified},
      {"hamiltonian_no_solution", report.hamiltonian_no_solution}};
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  out << "corpus report\n";
  out << "  pool: " << report.pool_id << "\n";
  out << "  rows: " << report.rows.size() << "\n";
  out << "confusion matrix (criterion vs oracle)\n";
  out << "  H/H:   " << report.matrix.criterion_h_oracle_h << "\n";
  out << "  H/NH:  " << report.matrix.criterion_h_oracle_nh << "\n";
  out << "  NH/H:  " << report.matrix.criterion_nh_oracle_h << "\n";
  out << "  NH/NH: " << report.matrix.criterion_nh_oracle_nh << "\n";
  out << "  unverified claims: " << report.matrix.unverified_claims << "\n";
  out << "  oracle budget exceeded: " << report.matrix.budget_exceeded << "\n";
  out << "  oracle-Hamiltonian rows with no equation solution: "
      << report.hamiltonian_no_solution << "\n";
  out << "mismatches (" << report.mismatches.size() << ")\n";
  for (const std::string& s : report.mismatches) out << "  " << s << "\n";
  out << "unverified (" << report.unverified.size() << ")\n";
  for (const std::string& s : report.unverified) out << "  " << s << "\n";
  return out.str();
}

void emit_report(const Report& report, const std::string& path, const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + path + "'");
  if (format == "structured") {
    out << report_to_json(report).dump(2) << "\n";
  } else if (format == "text") {
    out << report_to_text(report);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown report format '" + format + "'");
  }
  if (!out) fail(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace grin
