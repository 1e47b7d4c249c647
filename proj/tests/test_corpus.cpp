#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wreathgap/corpus.hpp"

using namespace wreathgap;
using namespace wreathgap::verify;

namespace {

const std::string kData = WREATHGAP_TEST_DATA;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const CheckResult* find_check(const EntryOutcome& o, const std::string& name) {
  for (const auto& r : o.results)
    if (r.check == name) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("default corpus composition") {
  const auto c = default_corpus();
  CHECK(c.size() == 108);
  std::map<std::string, int> per_group;
  std::set<std::tuple<std::string, int, int, std::uint64_t>> keys;
  for (const auto& e : c) {
    ++per_group[e.group];
    CHECK(e.checks.empty());
    CHECK(e.tol == 1e-8);
    CHECK((e.n == 2 || e.n == 3));
    keys.insert({e.group, e.n, static_cast<int>(e.hypergraph.generator), e.seed});
    CHECK(resolve_hypergraph(e).n() == e.n);
  }
  CHECK(keys.size() == c.size());
  CHECK(per_group == std::map<std::string, int>{{"C2", 36}, {"C3", 36}, {"S3", 36}});
}

TEST_CASE("parse_corpus accepts lists and objects") {
  CHECK(parse_corpus("[]").empty());
  CHECK(parse_corpus(R"({"entries": []})").empty());
  const auto c = parse_corpus(slurp(kData + "/small_corpus.json"));
  REQUIRE(c.size() == 5);
  CHECK(c[0].group == "C2");
  CHECK(c[0].n == 3);
  CHECK(c[0].hypergraph.generator == hypergraph::GeneratorKind::CompleteGraph);
  CHECK(c[0].checks.empty());
  CHECK(c[1].hypergraph.inline_graph.has_value());
  CHECK(c[1].caputo_class == hypergraph::CaputoClass::Pairs);
  CHECK(c[2].tol == 1e-9);
  REQUIRE(c[2].hypergraph.params.mean_field_f.has_value());
  CHECK(c[2].hypergraph.params.mean_field_f->at(3) == 0.5);
  const auto mf = resolve_hypergraph(c[2]);
  CHECK(mf.weight(0b0111u) == 0.5);
  CHECK(mf.weight(0b1111u) == 0.0);

  const auto akp = parse_corpus(
      R"([{"group": "C2", "n": 4, "hypergraph": {"generator": "akp", "params": {"anchor": [1, 2]}}, "seed": 3}])");
  REQUIRE(akp.size() == 1);
  CHECK(hypergraph::akp_anchor(resolve_hypergraph(akp[0])).has_value());
}

TEST_CASE("parse_corpus rejects bad entries") {
  CHECK_THROWS_AS(parse_corpus("{"), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus("42"), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(R"([{"group": "C2", "n": 2, "hypergraph": {"generator": "complete_graph"}, "checks": ["nope"]}])"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(R"([{"group": "C2", "n": 2, "hypergraph": {"generator": "complete_graph"}, "tol": 0}])"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(R"([{"group": "C2", "n": 3, "hypergraph": {"n": 2, "edges": []}}])"), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(R"([{"group": "C2", "n": 2, "hypergraph": {"generator": "tree"}}])"), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(R"([{"group": "C2", "hypergraph": {"generator": "complete_graph"}}])"), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(R"([{"group": "C2", "n": 2, "hypergraph": {"generator": "complete_graph"}, "class": "tree"}])"),
                  InvalidArgument);
}

TEST_CASE("entries round-trip through JSON") {
  auto c = parse_corpus(slurp(kData + "/small_corpus.json"));
  for (const auto& e : default_corpus()) c.push_back(e);
  ojson all = ojson::array();
  for (const auto& e : c) all.push_back(corpus_entry_to_json(e));
  const auto back = parse_corpus(all.dump());
  REQUIRE(back.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(corpus_entry_to_json(back[i]) == corpus_entry_to_json(c[i]));
    if (c[i].group != "no_such_group") CHECK(resolve_hypergraph(back[i]) == resolve_hypergraph(c[i]));
  }
}

TEST_CASE("run_corpus") {
  Workspace ws;
  const auto out = run_corpus(parse_corpus(slurp(kData + "/small_corpus.json")), ws);
  REQUIRE(out.size() == 5);

  // Every check, plus the implication that ties star, gap and lift equality to main.
  CHECK(out[0].results.size() == check_names().size() + 1);
  for (const auto& r : out[0].results) {
    CAPTURE(r.check);
    CHECK(r.status == Status::Pass);
  }
  REQUIRE(find_check(out[0], "implication"));
  CHECK(*find_check(out[0], "main")->lhs == doctest::Approx(1.5));

  REQUIRE(out[1].results.size() == 2);
  CHECK(out[1].results[0].status == Status::Pass);
  CHECK(*out[1].results[0].lhs == doctest::Approx(1.0));
  CHECK(out[1].results[1].status == Status::Pass);
  CHECK(!find_check(out[1], "implication"));

  REQUIRE(out[2].results.size() == 2);
  for (const auto& r : out[2].results) CHECK(r.status == Status::Pass);
  CHECK(out[2].results[0].tolerance == 1e-9);

  REQUIRE(out[3].results.size() == 2);
  for (const auto& r : out[3].results) {
    CHECK(r.status == Status::Skipped);
    CHECK(!r.reason.empty());
  }

  REQUIRE(out[4].results.size() == 1);
  CHECK(out[4].results[0].status == Status::Skipped);
  CHECK(out[4].results[0].reason.rfind("input: ", 0) == 0);
  CHECK(!out[4].hypergraph.has_value());
}

TEST_CASE("caputo and tuples skip outside their classes") {
  Workspace ws;
  CorpusEntry e;
  e.group = "C2";
  e.n = 3;
  hypergraph::WeightedHypergraph h(3);
  h.add_edge(0b011u, 1.0);
  h.add_edge(0b111u, 2.0);
  h.add_edge(0b001u, 0.5);
  e.hypergraph.inline_graph = h;
  e.checks = {"caputo", "tuples"};
  const auto out = run_corpus({e}, ws);
  REQUIRE(out[0].results.size() == 2);
  CHECK(out[0].results[1].status == Status::Skipped);
  e.caputo_class = hypergraph::CaputoClass::MeanField;
  const auto forced = run_corpus({e}, ws);
  CHECK(forced[0].results[0].status == Status::Skipped);
}
