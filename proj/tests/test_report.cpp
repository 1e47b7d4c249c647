#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "wreathgap/report.hpp"

using namespace wreathgap;
using namespace wreathgap::report;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

verify::CheckResult sample_check() {
  verify::CheckResult r;
  r.check = "main";
  r.lhs = 1.5;
  r.rhs = 1.5;
  r.margin = 0.0;
  r.witnesses = {"(2,1)", "(1)|(1)"};
  r.parts = {{"equality", verify::Status::Pass, 0.0, 1e-8, ""}, {"strict_nonlift", verify::Status::Skipped, {}, {}, "note, with comma"}};
  r.elapsed_seconds = 0.25;
  return r;
}

Report sample_report() {
  Report r;
  r.command = "verify";
  r.inputs["group"] = "C2";
  r.inputs["n"] = 3;
  r.add_check(sample_check(), false);
  spectral::SpectralReport s;
  s.label = "(2,1)";
  s.dimension = 2;
  s.eigenvalues = {1.5, 1.5};
  s.lambda_min = 1.5;
  r.add(spectrum_to_json(s));
  return r;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("table") == Format::Table);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("doubles") {
  CHECK(format_double(1.0) == "1.0");
  CHECK(format_double(1.5) == "1.5");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(INFINITY) == "null");
  CHECK(std::stod(format_double(2.0 / 3.0)) == 2.0 / 3.0);
}

TEST_CASE("empty report") {
  Report r;
  r.command = "corpus";
  const auto j = ojson::parse(render_json(r));
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(j.at("results").empty());
  CHECK(j.at("summary").at("pass") == 0);
  CHECK(lines(render_csv(r)) == std::vector<std::string>{"record,label,index,value,status"});
  const auto t = lines(render_table(r));
  REQUIRE(t.size() >= 2);
  CHECK(t.front().rfind("command:", 0) == 0);
  CHECK(t.back() == "summary: pass=0 fail=0 skipped=0");
}

TEST_CASE("summary counting") {
  Report r;
  auto c = sample_check();
  r.add_check(c, false);
  c.status = verify::Status::Fail;
  r.add_check(c, false, 3);
  c.status = verify::Status::Skipped;
  r.add_check(c, false);
  CHECK(r.summary.pass == 1);
  CHECK(r.summary.fail == 1);
  CHECK(r.summary.skipped == 1);
  CHECK(r.results[1].at("entry") == 3);
  CHECK(r.results[1].begin().key() == "kind");
}

TEST_CASE("check JSON layout") {
  const auto j = check_to_json(sample_check(), false);
  CHECK(j.at("kind") == "check");
  CHECK(j.at("status") == "pass");
  CHECK(j.at("lhs") == 1.5);
  CHECK(!j.contains("elapsed_seconds"));
  CHECK(!j.contains("reason"));
  CHECK(j.at("parts").size() == 2);
  CHECK(!j.at("parts")[1].contains("value"));
  CHECK(check_to_json(sample_check(), true).at("elapsed_seconds") == 0.25);
  verify::CheckResult empty;
  empty.check = "gap";
  CHECK(!check_to_json(empty, false).contains("lhs"));
}

TEST_CASE("JSON round trip") {
  const Report r = sample_report();
  const std::string text = render_json(r);
  const Report back = Report::from_json(ojson::parse(text));
  CHECK(render_json(back) == text);
  CHECK(render_csv(back) == render_csv(r));
  CHECK(render_table(back) == render_table(r));
  CHECK(back.summary.pass == 1);
  CHECK(render(r, Format::Csv) == render_csv(r));
}

TEST_CASE("CSV rows and quoting") {
  const auto rows = lines(render_csv(sample_report()));
  int spectrum = 0;
  bool quoted = false;
  for (const auto& row : rows) {
    if (row.rfind("spectrum,", 0) == 0) ++spectrum;
    if (row.rfind("spectrum,\"(2,1)\",", 0) == 0) quoted = true;
  }
  CHECK(spectrum == 2);
  CHECK(quoted);
  CHECK(rows.front() == "record,label,index,value,status");
}

TEST_CASE("hypergraph and irrep records") {
  hypergraph::WeightedHypergraph h(2);
  h.add_edge(0b11u, 1.0);
  const auto j = hypergraph_to_json(h);
  CHECK(j.at("kind") == "hypergraph");
  CHECK(hypergraph::parse_hypergraph(j.at("hypergraph").dump()) == h);
  Report r;
  r.command = "generate";
  r.add(j);
  CHECK(render_csv(r).find("edge,") != std::string::npos);
}
