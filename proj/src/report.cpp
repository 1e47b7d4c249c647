#include "wreathgap/report.hpp"

#include <cstdio>
#include <sstream>

namespace wreathgap::report {

using verify::CheckResult;
using verify::Status;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  throw InvalidArgument("unknown format: " + std::string(name));
}

namespace {

void put_optional(ojson& j, const char* key, const std::optional<double>& v) {
  if (v) j[key] = *v;
}

}  // namespace

ojson check_to_json(const CheckResult& r, bool timings) {
  ojson j;
  j["kind"] = "check";
  j["check"] = r.check;
  j["status"] = verify::status_name(r.status);
  put_optional(j, "lhs", r.lhs);
  put_optional(j, "rhs", r.rhs);
  put_optional(j, "margin", r.margin);
  j["tolerance"] = r.tolerance;
  j["witnesses"] = r.witnesses;
  if (!r.reason.empty()) j["reason"] = r.reason;
  auto parts = ojson::array();
  for (const auto& p : r.parts) {
    ojson pj;
    pj["name"] = p.name;
    pj["status"] = verify::status_name(p.status);
    put_optional(pj, "value", p.value);
    put_optional(pj, "bound", p.bound);
    if (!p.note.empty()) pj["note"] = p.note;
    parts.push_back(pj);
  }
  j["parts"] = parts;
  if (timings) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

ojson spectrum_to_json(const spectral::SpectralReport& s) {
  ojson j;
  j["kind"] = "spectrum";
  j["label"] = s.label;
  j["dimension"] = s.dimension;
  j["is_trivial"] = s.is_trivial;
  j["is_lift"] = s.is_lift;
  j["lambda_min"] = s.lambda_min;
  j["eigenvalues"] = s.eigenvalues;
  return j;
}

ojson irrep_to_json(const spectral::CatalogEntry& e) {
  ojson j;
  j["kind"] = "irrep";
  j["label"] = e.label;
  j["dimension"] = e.rep.dimension();
  j["is_trivial"] = e.is_trivial;
  j["is_lift"] = e.is_lift;
  if (!e.theta_signature.empty()) j["theta_signature"] = e.theta_signature;
  return j;
}

ojson hypergraph_to_json(const hypergraph::WeightedHypergraph& h) {
  ojson j;
  j["kind"] = "hypergraph";
  j["hypergraph"] = ojson::parse(hypergraph::serialize_hypergraph(h));
  return j;
}

void Report::add_check(const CheckResult& r, bool timings, std::optional<std::size_t> entry) {
  ojson j = check_to_json(r, timings);
  if (entry) {
    ojson withEntry;
    withEntry["kind"] = "check";
    withEntry["entry"] = *entry;
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "kind") withEntry[it.key()] = it.value();
    j = std::move(withEntry);
  }
  results.push_back(std::move(j));
  switch (r.status) {
    case Status::Pass: ++summary.pass; break;
    case Status::Fail: ++summary.fail; break;
    case Status::Skipped: ++summary.skipped; break;
  }
}

ojson Report::to_json() const {
  ojson j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["inputs"] = inputs;
  auto rs = ojson::array();
  for (const auto& r : results) rs.push_back(r);
  j["results"] = rs;
  j["summary"] = {{"pass", summary.pass}, {"fail", summary.fail}, {"skipped", summary.skipped}};
  return j;
}

Report Report::from_json(const ojson& j) {
  Report r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    for (const auto& x : j.at("results")) r.results.push_back(x);
    const auto& s = j.at("summary");
    r.summary = {s.at("pass").get<int>(), s.at("fail").get<int>(), s.at("skipped").get<int>()};
  } catch (const ojson::exception& e) {
    throw InvalidArgument(std::string("report: ") + e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------

std::string render_json(const Report& r) { return dump_json(r.to_json()) + "\n"; }

namespace {

std::string short_number(const ojson& v) {
  if (v.is_null()) return "-";
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string field(const ojson& j, const char* key) {
  return j.contains(key) ? short_number(j.at(key)) : std::string("-");
}

std::string pad(std::string s, std::size_t width) {
  // Width counts bytes; labels containing multi-byte glyphs just run long.
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string edge_label(const ojson& vertices) {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vertices[i].get<int>());
  }
  return s + "}";
}

void table_check(std::ostringstream& os, const ojson& c) {
  os << pad(c.at("check").get<std::string>(), 16) << pad(c.at("status").get<std::string>(), 9)
     << "lhs=" << field(c, "lhs") << "  rhs=" << field(c, "rhs") << "  margin=" << field(c, "margin")
     << "  tol=" << field(c, "tolerance");
  if (c.contains("elapsed_seconds")) os << "  elapsed=" << field(c, "elapsed_seconds") << "s";
  os << "\n";
  if (c.contains("reason")) os << "    reason: " << c.at("reason").get<std::string>() << "\n";
  if (!c.at("witnesses").empty()) {
    os << "    witnesses:";
    for (const auto& w : c.at("witnesses")) os << " " << w.get<std::string>();
    os << "\n";
  }
  for (const auto& p : c.at("parts")) {
    os << "    " << pad(p.at("name").get<std::string>(), 26) << pad(p.at("status").get<std::string>(), 9);
    if (p.contains("value")) os << "value=" << field(p, "value") << "  ";
    if (p.contains("bound")) os << "bound=" << field(p, "bound") << "  ";
    if (p.contains("note")) os << p.at("note").get<std::string>();
    os << "\n";
  }
}

}  // namespace

std::string render_table(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  bool irrep_header = false;
  for (const auto& x : r.results) {
    const std::string kind = x.at("kind").get<std::string>();
    if (kind != "irrep") irrep_header = false;
    if (kind == "check") {
      table_check(os, x);
    } else if (kind == "spectrum") {
      os << "spectrum " << x.at("label").get<std::string>() << "  dim=" << field(x, "dimension")
         << "  lambda_min=" << field(x, "lambda_min") << (x.at("is_lift").get<bool>() ? "  lift" : "")
         << (x.at("is_trivial").get<bool>() ? "  trivial" : "") << "\n";
      os << "    eigenvalues:";
      for (const auto& v : x.at("eigenvalues")) os << " " << short_number(v);
      os << "\n";
    } else if (kind == "irrep") {
      if (!irrep_header) {
        os << pad("label", 28) << pad("dim", 8) << pad("lift", 6) << "trivial\n";
        irrep_header = true;
      }
      os << pad(x.at("label").get<std::string>(), 28) << pad(field(x, "dimension"), 8)
         << pad(x.at("is_lift").get<bool>() ? "yes" : "no", 6) << (x.at("is_trivial").get<bool>() ? "yes" : "no")
         << "\n";
    } else if (kind == "hypergraph") {
      const auto& h = x.at("hypergraph");
      os << "hypergraph n=" << h.at("n").get<int>() << "\n";
      for (const auto& e : h.at("edges"))
        os << "    " << pad(edge_label(e.at("vertices")), 24) << short_number(e.at("weight")) << "\n";
    } else if (kind == "entry") {
      os << "entry " << x.at("index").get<std::size_t>() << ": " << x.at("label").get<std::string>() << "\n";
    }
  }
  os << "summary: pass=" << r.summary.pass << " fail=" << r.summary.fail << " skipped=" << r.summary.skipped
     << "\n";
  return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_number(const ojson& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_null()) return "";
  return v.dump();
}

void csv_row(std::ostringstream& os, const std::string& record, const std::string& label, const std::string& index,
             const std::string& value, const std::string& status) {
  os << csv_field(record) << ',' << csv_field(label) << ',' << csv_field(index) << ',' << csv_field(value) << ','
     << csv_field(status) << "\n";
}

}  // namespace

std::string render_csv(const Report& r) {
  std::ostringstream os;
  os << "record,label,index,value,status\n";
  std::size_t irrep_index = 0;
  for (const auto& x : r.results) {
    const std::string kind = x.at("kind").get<std::string>();
    if (kind == "check") {
      const std::string index = x.contains("entry") ? std::to_string(x.at("entry").get<std::size_t>()) : "";
      csv_row(os, "check", x.at("check").get<std::string>(), index, x.contains("lhs") ? csv_number(x.at("lhs")) : "",
              x.at("status").get<std::string>());
    } else if (kind == "spectrum") {
      const auto& ev = x.at("eigenvalues");
      for (std::size_t i = 0; i < ev.size(); ++i)
        csv_row(os, "spectrum", x.at("label").get<std::string>(), std::to_string(i), csv_number(ev[i]), "");
    } else if (kind == "irrep") {
      csv_row(os, "irrep", x.at("label").get<std::string>(), std::to_string(irrep_index++),
              csv_number(x.at("dimension")), x.at("is_lift").get<bool>() ? "lift" : "nonlift");
    } else if (kind == "hypergraph") {
      const auto& edges = x.at("hypergraph").at("edges");
      for (std::size_t i = 0; i < edges.size(); ++i)
        csv_row(os, "edge", edge_label(edges[i].at("vertices")), std::to_string(i),
                csv_number(edges[i].at("weight")), "");
    } else if (kind == "entry") {
      csv_row(os, "entry", x.at("label").get<std::string>(), std::to_string(x.at("index").get<std::size_t>()), "",
              x.at("status").get<std::string>());
    }
  }
  return os.str();
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::Json: return render_json(r);
    case Format::Table: return render_table(r);
    case Format::Csv: return render_csv(r);
  }
  return {};
}

}  // namespace wreathgap::report
