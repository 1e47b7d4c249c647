#pragma once
// Corpus specifications: lists of (group, n, hypergraph, seed, checks, tol)
// entries, the built-in default corpus, and the runner.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wreathgap/json_format.hpp"
#include "wreathgap/verify.hpp"

namespace wreathgap::verify {

struct HypergraphSource {
  std::optional<WeightedHypergraph> inline_graph;
  hypergraph::GeneratorKind generator = hypergraph::GeneratorKind::CompleteGraph;
  hypergraph::GeneratorParams params;
};

struct CorpusEntry {
  std::string group;
  int n = 2;
  HypergraphSource hypergraph;
  std::uint64_t seed = 0;
  std::vector<std::string> checks;  // empty means every check
  double tol = 1e-8;
  std::optional<hypergraph::CaputoClass> caputo_class;  // auto-detected when absent
};

/// {C2, C3, S3} × n ∈ {2, 3} × every generator × seeds {1, 2, 3}.
std::vector<CorpusEntry> default_corpus();

/// A JSON list of entries, or an object with an "entries" list.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
ojson corpus_entry_to_json(const CorpusEntry& e);

WeightedHypergraph resolve_hypergraph(const CorpusEntry& e);

struct EntryOutcome {
  std::size_t index = 0;
  CorpusEntry entry;
  std::optional<WeightedHypergraph> hypergraph;
  std::vector<CheckResult> results;
};

/// Runs every entry in order. Guard violations and class mismatches become
/// skipped results. When main, star, gap and structural all ran, an extra
/// "implication" result asserts star ∧ gap ∧ lift equality ⇒ main.
std::vector<EntryOutcome> run_corpus(const std::vector<CorpusEntry>& corpus, Workspace& ws);

}  // namespace wreathgap::verify
