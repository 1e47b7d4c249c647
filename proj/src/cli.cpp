#include "wreathgap/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wreathgap/corpus.hpp"
#include "wreathgap/report.hpp"
#include "wreathgap/sn_reps.hpp"
#include "wreathgap/spectral.hpp"
#include "wreathgap/verify.hpp"

namespace wreathgap::cli {

namespace {

using hypergraph::WeightedHypergraph;
using report::Report;

struct Options {
  std::string group;
  bool sn = false;
  int n = 0;
  std::string hypergraph;
  std::string irrep;
  bool all_irreps = false;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool guard_override = false;
  bool timings = false;
  std::string check;
  std::string caputo_class;
  std::string corpus;
  std::string kind;
  std::string params;
  std::string output;
};

void add_group_options(CLI::App* app, Options& o, bool allow_sn) {
  app->add_option("--group", o.group, "Base group: builtin name (C1..C12, S3, K4) or JSON file");
  if (allow_sn) app->add_flag("--sn", o.sn, "Work over the symmetric group itself");
}

void add_common_options(CLI::App* app, Options& o) {
  app->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
  app->add_flag("--guard-override", o.guard_override, "Lift the irrep enumeration guard");
  app->add_flag("--timings", o.timings, "Include elapsed seconds per check");
}

groups::GroupPtr require_group(const Options& o) {
  if (o.group.empty()) throw InvalidArgument("--group is required");
  return groups::load_group(o.group);
}

WeightedHypergraph require_hypergraph(const Options& o) {
  if (o.hypergraph.empty()) throw InvalidArgument("--hypergraph is required");
  WeightedHypergraph h = hypergraph::load_hypergraph(o.hypergraph);
  if (o.n != 0 && o.n != h.n())
    throw InvalidArgument("--n " + std::to_string(o.n) + " differs from the hypergraph size " +
                          std::to_string(h.n()));
  return h;
}

int require_n(const Options& o) {
  if (o.n < 2) throw InvalidArgument("--n must be at least 2");
  return o.n;
}

ojson echo_common(const Options& o) {
  ojson in;
  if (o.sn) in["group"] = "S_n";
  else if (!o.group.empty()) in["group"] = o.group;
  return in;
}

void echo_hypergraph(ojson& in, const Options& o, const WeightedHypergraph& h) {
  in["n"] = h.n();
  in["hypergraph_file"] = o.hypergraph;
  in["hypergraph"] = ojson::parse(hypergraph::serialize_hypergraph(h));
}

void echo_tail(ojson& in, const Options& o, const verify::Workspace& ws) {
  in["tol"] = o.tol;
  in["seed"] = o.seed;
  in["guard_override"] = o.guard_override;
  in["max_order"] = ws.options().max_order;
}

verify::Workspace make_workspace(const Options& o) {
  return verify::Workspace({o.guard_override, spectral::dense_order_guard()});
}

// ---------------------------------------------------------------------------

Report run_irreps(const Options& o) {
  if (o.sn == !o.group.empty()) throw InvalidArgument("give exactly one of --group and --sn");
  const int n = require_n(o);
  verify::Workspace ws = make_workspace(o);
  Report r;
  r.command = "irreps";
  r.inputs = echo_common(o);
  r.inputs["n"] = n;
  r.inputs["guard_override"] = o.guard_override;
  const spectral::IrrepCatalog& cat = o.sn ? ws.symmetric(n) : ws.wreath(require_group(o), n);
  for (const auto& e : cat.entries()) r.add(report::irrep_to_json(e));
  return r;
}

Report run_spectrum(const Options& o) {
  if (o.sn == !o.group.empty()) throw InvalidArgument("give exactly one of --group and --sn");
  if (o.all_irreps && !o.irrep.empty()) throw InvalidArgument("--irrep and --all-irreps are exclusive");
  const WeightedHypergraph h = require_hypergraph(o);
  const int n = h.n();
  verify::Workspace ws = make_workspace(o);
  groups::GroupPtr g = o.sn ? nullptr : require_group(o);
  const spectral::IrrepCatalog& cat = o.sn ? ws.symmetric(n) : ws.wreath(g, n);

  Report r;
  r.command = "spectrum";
  r.inputs = echo_common(o);
  echo_hypergraph(r.inputs, o, h);
  r.inputs["irrep"] = o.irrep.empty() ? ojson("all") : ojson(o.irrep);
  echo_tail(r.inputs, o, ws);

  const spectral::Flavor flavor = cat.flavor();
  if (o.irrep.empty()) {
    for (const auto& e : cat.entries())
      r.add(report::spectrum_to_json(spectral::spectral_report(e.rep, h, flavor, e.is_trivial, e.is_lift)));
  } else if (o.irrep == "std") {
    const reps::MatrixRepresentation& rep =
        o.sn ? ws.standard(n) : ws.lifted(g, combinatorics::Partition({n - 1, 1}));
    r.add(report::spectrum_to_json(spectral::spectral_report(rep, h, flavor, false, true)));
  } else {
    const auto& e = cat.find(o.irrep);
    r.add(report::spectrum_to_json(spectral::spectral_report(e.rep, h, flavor, e.is_trivial, e.is_lift)));
  }
  return r;
}

Report run_verify(const Options& o) {
  verify::Workspace ws = make_workspace(o);
  Report r;
  r.command = "verify " + o.check;
  r.inputs = echo_common(o);
  verify::CheckResult result;

  if (o.check == "classification") {
    if (!o.hypergraph.empty()) throw InvalidArgument("classification takes --n, not --hypergraph");
    const int n = require_n(o);
    r.inputs["n"] = n;
    echo_tail(r.inputs, o, ws);
    result = verify::check_classification(ws, require_group(o), n);
    r.add_check(result, o.timings);
    return r;
  }

  const WeightedHypergraph h = require_hypergraph(o);
  echo_hypergraph(r.inputs, o, h);
  if (o.check == "caputo") {
    std::optional<hypergraph::CaputoClass> cls;
    if (!o.caputo_class.empty()) {
      cls = hypergraph::parse_caputo_class(o.caputo_class);
    } else {
      const auto found = hypergraph::classes_of(h);
      if (found.empty()) throw InvalidArgument("hypergraph is in none of the verified classes");
      cls = found.front();
    }
    r.inputs["class"] = hypergraph::caputo_class_name(*cls);
    echo_tail(r.inputs, o, ws);
    result = verify::check_caputo_instances(ws, require_group(o), h, *cls, o.tol);
  } else {
    echo_tail(r.inputs, o, ws);
    if (o.check == "main") result = verify::check_main_theorem(ws, require_group(o), h, o.tol);
    else if (o.check == "star") {
      std::vector<groups::GroupPtr> lifts;
      if (!o.group.empty()) lifts.push_back(require_group(o));
      result = verify::check_prop_star(ws, h, o.tol, lifts);
    } else if (o.check == "gap") result = verify::check_prop_gap(ws, require_group(o), h, o.tol);
    else if (o.check == "oracle") {
      if (o.sn == !o.group.empty()) throw InvalidArgument("give exactly one of --group and --sn");
      result = verify::brute_force_oracle(ws, o.sn ? nullptr : require_group(o), h, o.tol);
    } else if (o.check == "tuples") result = verify::check_remark_tuples(ws, require_group(o), h, o.tol);
    else if (o.check == "structural") result = verify::check_structural(ws, require_group(o), h, o.tol, o.seed);
    else throw InvalidArgument("unknown check: " + o.check);
  }
  r.add_check(result, o.timings);
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report run_corpus(const Options& o) {
  const std::vector<verify::CorpusEntry> corpus =
      o.corpus.empty() ? verify::default_corpus() : verify::parse_corpus(read_file(o.corpus));
  verify::Workspace ws = make_workspace(o);
  Report r;
  r.command = "corpus";
  r.inputs["corpus"] = o.corpus.empty() ? std::string("default") : o.corpus;
  r.inputs["entries"] = corpus.size();
  r.inputs["guard_override"] = o.guard_override;
  r.inputs["max_order"] = ws.options().max_order;

  for (const auto& outcome : verify::run_corpus(corpus, ws)) {
    const verify::CorpusEntry& e = outcome.entry;
    std::vector<verify::SubCheck> statuses;
    for (const auto& c : outcome.results) statuses.push_back({c.check, c.status, {}, {}, {}});
    ojson ej;
    ej["kind"] = "entry";
    ej["index"] = outcome.index;
    std::string label = e.group + " n=" + std::to_string(e.n) + " " +
                        (e.hypergraph.inline_graph ? std::string("inline")
                                                   : hypergraph::generator_name(e.hypergraph.generator)) +
                        " seed=" + std::to_string(e.seed);
    ej["label"] = label;
    ej["status"] = verify::status_name(verify::combine(statuses));
    ej["spec"] = verify::corpus_entry_to_json(e);
    if (outcome.hypergraph) ej["hypergraph"] = ojson::parse(hypergraph::serialize_hypergraph(*outcome.hypergraph));
    r.add(ej);
    for (const auto& c : outcome.results) r.add_check(c, o.timings, outcome.index);
  }
  return r;
}

Report run_generate(const Options& o) {
  if (o.kind.empty()) throw InvalidArgument("--kind is required");
  hypergraph::GeneratorParams params;
  params.n = require_n(o);
  ojson params_echo = ojson::object();
  if (!o.params.empty()) {
    // A minimal corpus entry reuses the corpus parameter grammar.
    nlohmann::json entry;
    try {
      entry = {{"group", "C1"}, {"n", o.n}, {"hypergraph", {{"generator", o.kind}, {"params", nlohmann::json::parse(o.params)}}}};
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("--params: ") + e.what());
    }
    const auto parsed = verify::parse_corpus(nlohmann::json::array({entry}).dump());
    params = parsed.front().hypergraph.params;
    params_echo = verify::corpus_entry_to_json(parsed.front())["hypergraph"].value("params", ojson::object());
  }
  const auto kind = hypergraph::parse_generator_kind(o.kind);
  const WeightedHypergraph h = hypergraph::generate(kind, params, o.seed);
  if (!o.output.empty()) {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + o.output);
    out << hypergraph::serialize_hypergraph(h);
  }
  Report r;
  r.command = "generate";
  r.inputs["kind"] = hypergraph::generator_name(kind);
  r.inputs["n"] = params.n;
  r.inputs["seed"] = o.seed;
  r.inputs["params"] = params_echo;
  if (!o.output.empty()) r.inputs["output"] = o.output;
  r.add(report::hypergraph_to_json(h));
  return r;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectral gap identities for wreath products G≀Sₙ", "wreathgap"};
  app.require_subcommand(1);

  CLI::App* irreps = app.add_subcommand("irreps", "List the irreducible representations");
  add_group_options(irreps, o, true);
  irreps->add_option("--n", o.n, "Degree n")->required();
  add_common_options(irreps, o);

  CLI::App* spectrum = app.add_subcommand("spectrum", "Spectra of ρ(𝓛) for irreps ρ");
  add_group_options(spectrum, o, true);
  spectrum->add_option("--n", o.n, "Degree n (must match the hypergraph)");
  spectrum->add_option("--hypergraph", o.hypergraph, "Hypergraph JSON file")->required();
  spectrum->add_option("--irrep", o.irrep, "Irrep label, or std");
  spectrum->add_flag("--all-irreps", o.all_irreps, "Every irrep (the default)");
  add_common_options(spectrum, o);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run one check");
  verify_cmd->add_option("check", o.check, "main|star|gap|oracle|caputo|tuples|structural|classification")
      ->required()
      ->check(CLI::IsMember(verify::check_names()));
  add_group_options(verify_cmd, o, true);
  verify_cmd->add_option("--n", o.n, "Degree n");
  verify_cmd->add_option("--hypergraph", o.hypergraph, "Hypergraph JSON file");
  verify_cmd->add_option("--class", o.caputo_class, "pairs|tuples|mean_field|akp (caputo only)");
  verify_cmd->add_option("--seed", o.seed, "Sampling seed");
  add_common_options(verify_cmd, o);

  CLI::App* corpus = app.add_subcommand("corpus", "Run a corpus of checks");
  corpus->add_option("--corpus", o.corpus, "Corpus JSON file (default: the built-in corpus)");
  add_common_options(corpus, o);

  CLI::App* generate = app.add_subcommand("generate", "Generate a hypergraph");
  generate->add_option("--kind", o.kind, "complete_graph|mean_field|pairs_random|top_heavy|akp|random")->required();
  generate->add_option("--n", o.n, "Vertices")->required();
  generate->add_option("--seed", o.seed, "Seed");
  generate->add_option("--params", o.params, "Generator parameters as JSON");
  generate->add_option("--output", o.output, "Also write the bare hypergraph file");
  add_common_options(generate, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "wreathgap: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Report r;
    if (irreps->parsed()) r = run_irreps(o);
    else if (spectrum->parsed()) r = run_spectrum(o);
    else if (verify_cmd->parsed()) r = run_verify(o);
    else if (corpus->parsed()) r = run_corpus(o);
    else r = run_generate(o);
    out << report::render(r, report::parse_format(o.format));
    return r.summary.fail > 0 ? kExitFail : kExitPass;
  } catch (const Error& e) {
    err << "wreathgap: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "wreathgap: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "wreathgap: " << e.what() << "\n";
  }
  return kExitUsage;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"wreathgap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wreathgap::cli
