#ifndef GRIN_CORPUS_HPP
#define GRIN_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "grin/decision.hpp"
#include "grin/graph.hpp"

namespace grin {

/// What to evaluate and how. Sources: a list of catalog names, seeded G(n,p)
/// samples, the exhaustive labeled enumeration (n <= 7), or a graph file.
struct CorpusSpec {
  enum class Source { Named, Gnp, ExhaustiveLabeled, File };
  Source source = Source::Named;

  std::vector<std::string> names;

  int n = 0;  // gnp / exhaustive
  double p = 0.5;
  std::uint64_t seed = 1;
  int count = 0;

  bool connected_only = true;

  std::string path;
  std::string format;  // "graph6" | "edgelist"

  SolutionConfig decision;
  /// Search-node cap for the oracle on rows with n > 12 (0 = unlimited);
  /// rows with n <= 12 always run exhaustively so ground truth stays exact.
  std::uint64_t oracle_budget = 10'000'000;
};

CorpusSpec parse_corpus_spec(const nlohmann::json& j);
CorpusSpec load_corpus_spec(const std::string& path);

struct ReportRow {
  std::string graph6;
  int n = 0;
  int m = 0;
  Outcome outcome = Outcome::NonHamiltonian;
  NonHamReason reason = NonHamReason::None;
  OracleResult::Status oracle = OracleResult::Status::NonHamiltonian;
  int agreement = -1;  // 1 agree, 0 disagree, -1 not comparable
  bool solutions_truncated = false;
  bool certificate_ok = true;  // re-verified for Hamiltonian rows
  std::int64_t decide_us = 0;
  std::int64_t oracle_us = 0;
};

/// Every row lands in exactly one bucket, so the six fields sum to the
/// corpus size.
struct ConfusionMatrix {
  std::uint64_t criterion_h_oracle_h = 0;
  std::uint64_t criterion_h_oracle_nh = 0;
  std::uint64_t criterion_nh_oracle_h = 0;
  std::uint64_t criterion_nh_oracle_nh = 0;
  std::uint64_t unverified_claims = 0;
  std::uint64_t budget_exceeded = 0;

  std::uint64_t total() const {
    return criterion_h_oracle_h + criterion_h_oracle_nh + criterion_nh_oracle_h +
           criterion_nh_oracle_nh + unverified_claims + budget_exceeded;
  }
};

struct Report {
  std::string pool_id;
  std::uint64_t oracle_budget = 0;
  std::vector<ReportRow> rows;
  ConfusionMatrix matrix;
  std::vector<std::string> mismatches;   // graph6 of every decide/oracle disagreement
  std::vector<std::string> unverified;   // graph6 of unverified-claim rows
  std::uint64_t hamiltonian_no_solution = 0;  // oracle-Hamiltonian rows decided NoSolution
};

/// Evaluates decide and the oracle on every corpus graph. Rows are
/// independent work items: the parallel variant distributes them across
/// OpenMP threads and merges in corpus order, so both variants produce the
/// same report content.
Report run_corpus(const CorpusSpec& spec);
Report run_corpus_serial(const CorpusSpec& spec);

nlohmann::json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

/// format is "structured" (versioned JSON, byte-stable for a given report)
/// or "text" (human summary with the confusion matrix).
void emit_report(const Report& report, const std::string& path, const std::string& format);

}  // namespace grin

#endif
