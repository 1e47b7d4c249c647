#include "wreathgap/corpus.hpp"

#include <algorithm>
#include <map>

namespace wreathgap::verify {

using hypergraph::GeneratorKind;

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  for (const char* g : {"C2", "C3", "S3"})
    for (int n : {2, 3})
      for (GeneratorKind kind : hypergraph::all_generator_kinds())
        for (std::uint64_t seed : {1, 2, 3}) {
          CorpusEntry e;
          e.group = g;
          e.n = n;
          e.hypergraph.generator = kind;
          e.hypergraph.params.n = n;
          e.seed = seed;
          out.push_back(std::move(e));
        }
  return out;
}

namespace {

HypergraphSource parse_source(const nlohmann::json& j, int n) {
  HypergraphSource src;
  src.params.n = n;
  if (!j.is_object()) throw InvalidArgument("corpus: hypergraph must be an object");
  if (j.contains("edges")) {
    src.inline_graph = hypergraph::parse_hypergraph(j.dump());
    return src;
  }
  src.generator = hypergraph::parse_generator_kind(j.at("generator").get<std::string>());
  if (j.contains("params")) {
    const auto& p = j.at("params");
    if (p.contains("f")) {
      std::map<int, double> f;
      for (auto it = p.at("f").begin(); it != p.at("f").end(); ++it) f[std::stoi(it.key())] = it.value().get<double>();
      src.params.mean_field_f = f;
    }
    if (p.contains("anchor")) src.params.akp_anchor = set_from_list(p.at("anchor").get<std::vector<int>>(), n);
  }
  return src;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("corpus file: ") + e.what());
  }
  const nlohmann::json& list = j.is_object() && j.contains("entries") ? j.at("entries") : j;
  if (!list.is_array()) throw InvalidArgument("corpus file: expected a list of entries");
  std::vector<CorpusEntry> out;
  try {
    for (const auto& ej : list) {
      CorpusEntry e;
      e.group = ej.at("group").get<std::string>();
      e.n = ej.at("n").get<int>();
      e.hypergraph = parse_source(ej.at("hypergraph"), e.n);
      e.seed = ej.value("seed", std::uint64_t{0});
      e.checks = ej.value("checks", std::vector<std::string>{});
      for (const auto& c : e.checks)
        if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
          throw InvalidArgument("corpus file: unknown check " + c);
      e.tol = ej.value("tol", 1e-8);
      if (!(e.tol > 0.0)) throw InvalidArgument("corpus file: tol must be positive");
      if (ej.contains("class")) e.caputo_class = hypergraph::parse_caputo_class(ej.at("class").get<std::string>());
      if (e.hypergraph.inline_graph && e.hypergraph.inline_graph->n() != e.n)
        throw InvalidArgument("corpus file: inline hypergraph size differs from n");
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("corpus file: ") + e.what());
  }
  return out;
}

ojson corpus_entry_to_json(const CorpusEntry& e) {
  ojson j;
  j["group"] = e.group;
  j["n"] = e.n;
  if (e.hypergraph.inline_graph) {
    j["hypergraph"] = ojson::parse(hypergraph::serialize_hypergraph(*e.hypergraph.inline_graph));
  } else {
    ojson h;
    h["generator"] = hypergraph::generator_name(e.hypergraph.generator);
    ojson params = ojson::object();
    if (e.hypergraph.params.mean_field_f) {
      ojson f = ojson::object();
      for (const auto& [k, v] : *e.hypergraph.params.mean_field_f) f[std::to_string(k)] = v;
      params["f"] = f;
    }
    if (e.hypergraph.params.akp_anchor) params["anchor"] = set_to_list(*e.hypergraph.params.akp_anchor);
    if (!params.empty()) h["params"] = params;
    j["hypergraph"] = h;
  }
  j["seed"] = e.seed;
  j["checks"] = e.checks.empty() ? check_names() : e.checks;
  j["tol"] = e.tol;
  if (e.caputo_class) j["class"] = hypergraph::caputo_class_name(*e.caputo_class);
  return j;
}

WeightedHypergraph resolve_hypergraph(const CorpusEntry& e) {
  if (e.hypergraph.inline_graph) return *e.hypergraph.inline_graph;
  auto params = e.hypergraph.params;
  params.n = e.n;
  return hypergraph::generate(e.hypergraph.generator, params, e.seed);
}

namespace {

CheckResult skipped(const std::string& check, const std::string& reason, double tol) {
  CheckResult r;
  r.check = check;
  r.status = Status::Skipped;
  r.reason = reason;
  r.tolerance = tol;
  return r;
}

const CheckResult* find(const std::vector<CheckResult>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.check == name) return &r;
  return nullptr;
}

CheckResult implication(const std::vector<CheckResult>& rs, double tol) {
  CheckResult r;
  r.check = "implication";
  r.tolerance = tol;
  const CheckResult *main = find(rs, "main"), *star = find(rs, "star"), *gap = find(rs, "gap"),
                    *structural = find(rs, "structural");
  bool lift_ok = false;
  for (const auto& p : structural->parts)
    if (p.name == "lift_equality") lift_ok = p.status == Status::Pass;
  const bool premises = star->status == Status::Pass && gap->status == Status::Pass && lift_ok;
  if (!premises) {
    r.status = Status::Skipped;
    r.reason = "premises not all established";
  } else if (main->status == Status::Skipped) {
    r.status = Status::Skipped;
    r.reason = "main check skipped";
  } else {
    bool equality = false;
    for (const auto& p : main->parts)
      if (p.name == "equality") equality = p.status == Status::Pass;
    r.status = equality ? Status::Pass : Status::Fail;
    if (!equality) r.reason = "star, gap and lift equality hold but the main equality fails";
  }
  return r;
}

}  // namespace

std::vector<EntryOutcome> run_corpus(const std::vector<CorpusEntry>& corpus, Workspace& ws) {
  std::vector<EntryOutcome> out;
  std::map<std::string, groups::GroupPtr> groups_by_name;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CorpusEntry& e = corpus[i];
    EntryOutcome o{i, e, std::nullopt, {}};
    const std::vector<std::string> checks = e.checks.empty() ? check_names() : e.checks;

    groups::GroupPtr g;
    try {
      auto& slot = groups_by_name[e.group];
      if (!slot) slot = groups::load_group(e.group);
      g = slot;
      o.hypergraph = resolve_hypergraph(e);
    } catch (const Error& err) {
      for (const auto& c : checks) o.results.push_back(skipped(c, std::string("input: ") + err.what(), e.tol));
      out.push_back(std::move(o));
      continue;
    }
    const WeightedHypergraph& h = *o.hypergraph;

    for (const auto& c : checks) {
      try {
        if (c == "main") o.results.push_back(check_main_theorem(ws, g, h, e.tol));
        else if (c == "star") o.results.push_back(check_prop_star(ws, h, e.tol, {g}));
        else if (c == "gap") o.results.push_back(check_prop_gap(ws, g, h, e.tol));
        else if (c == "oracle") o.results.push_back(brute_force_oracle(ws, g, h, e.tol));
        else if (c == "caputo") {
          std::optional<hypergraph::CaputoClass> cls = e.caputo_class;
          if (!cls) {
            const auto found = hypergraph::classes_of(h);
            if (!found.empty()) cls = found.front();
          }
          if (!cls) o.results.push_back(skipped(c, "hypergraph is in none of the verified classes", e.tol));
          else o.results.push_back(check_caputo_instances(ws, g, h, *cls, e.tol));
        } else if (c == "tuples") {
          if (!hypergraph::is_tuples(h)) o.results.push_back(skipped(c, "hypergraph is not supported on |B| ≥ n−1", e.tol));
          else o.results.push_back(check_remark_tuples(ws, g, h, e.tol));
        } else if (c == "structural") o.results.push_back(check_structural(ws, g, h, e.tol, e.seed));
        else if (c == "classification") o.results.push_back(check_classification(ws, g, h.n()));
        else o.results.push_back(skipped(c, "unknown check", e.tol));
      } catch (const Error& err) {
        o.results.push_back(skipped(c, err.what(), e.tol));
      }
    }
    if (find(o.results, "main") && find(o.results, "star") && find(o.results, "gap") &&
        find(o.results, "structural"))
      o.results.push_back(implication(o.results, e.tol));
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace wreathgap::verify
