#pragma once
// Command reports and their JSON, table and CSV renderings.

#include <string>
#include <string_view>
#include <vector>

#include "wreathgap/json_format.hpp"
#include "wreathgap/spectral.hpp"
#include "wreathgap/verify.hpp"

namespace wreathgap::report {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Table, Csv };
Format parse_format(std::string_view name);

struct Summary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
};

/// Every result carries a "kind": check, spectrum, irrep, hypergraph or entry.
struct Report {
  int schema_version = kSchemaVersion;
  std::string command;
  ojson inputs = ojson::object();
  std::vector<ojson> results;
  Summary summary;

  void add_check(const verify::CheckResult& r, bool timings, std::optional<std::size_t> entry = std::nullopt);
  void add(ojson result) { results.push_back(std::move(result)); }

  ojson to_json() const;
  static Report from_json(const ojson& j);
};

ojson check_to_json(const verify::CheckResult& r, bool timings);
ojson spectrum_to_json(const spectral::SpectralReport& s);
ojson irrep_to_json(const spectral::CatalogEntry& e);
ojson hypergraph_to_json(const hypergraph::WeightedHypergraph& h);

std::string render(const Report& r, Format f);
std::string render_json(const Report& r);
std::string render_table(const Report& r);
std::string render_csv(const Report& r);

}  // namespace wreathgap::report
