#include "wreathgap/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "wreathgap/json_format.hpp"

namespace wreathgap::hypergraph {

WeightedHypergraph::WeightedHypergraph(int n) : n_(n) {
  if (n < 2 || n > kMaxVertices)
    throw InvalidArgument("hypergraph vertex count must lie in [2, " + std::to_string(kMaxVertices) + "]");
}

void WeightedHypergraph::add_edge(VertexSet b, double weight) {
  if (b & ~full_set(n_)) throw InvalidArgument("edge " + set_to_string(b) + " has a vertex outside [n]");
  if (!std::isfinite(weight) || weight < 0.0)
    throw InvalidArgument("edge " + set_to_string(b) + " has a negative or non-finite weight");
  if (!weights_.emplace(b, weight).second)
    throw InvalidArgument("duplicate edge " + set_to_string(b));
}

double WeightedHypergraph::weight(VertexSet b) const {
  auto it = weights_.find(b);
  return it == weights_.end() ? 0.0 : it->second;
}

namespace {

bool canonical_less(VertexSet a, VertexSet b) {
  if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
  return set_to_list(a) < set_to_list(b);
}

}  // namespace

std::vector<std::pair<VertexSet, double>> WeightedHypergraph::edges() const {
  std::vector<std::pair<VertexSet, double>> out(weights_.begin(), weights_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  return out;
}

std::vector<VertexSet> WeightedHypergraph::support() const {
  std::vector<VertexSet> out;
  for (const auto& [b, c] : edges())
    if (c > 0.0) out.push_back(b);
  return out;
}

double WeightedHypergraph::total_weight() const {
  double s = 0.0;
  for (const auto& [b, c] : edges()) s += c;
  return s;
}

WeightedHypergraph WeightedHypergraph::scaled(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidArgument("scale factor must be nonnegative");
  WeightedHypergraph out(n_);
  for (const auto& [b, c] : weights_) out.add_edge(b, s * c);
  return out;
}

WeightedHypergraph WeightedHypergraph::relabeled(const groups::Permutation& sigma) const {
  if (sigma.degree() != n_) throw InvalidArgument("relabeling has the wrong degree");
  WeightedHypergraph out(n_);
  for (const auto& [b, c] : weights_) {
    VertexSet image = 0;
    for (int i = 0; i < n_; ++i)
      if (contains(b, i)) image |= 1u << sigma(i);
    out.add_edge(image, c);
  }
  return out;
}

DegreeProfile degree_profile(const WeightedHypergraph& h) {
  const int n = h.n();
  DegreeProfile p;
  p.per_vertex.assign(n, 0.0);
  std::vector<char> touched(n, 0);
  for (const auto& [b, c] : h.edges())
    for (int i = 0; i < n; ++i) {
      if (!contains(b, i)) continue;
      p.per_vertex[i] += c;
      if (c > 0.0 && b != full_set(n)) touched[i] = 1;
    }
  p.min_degree = *std::min_element(p.per_vertex.begin(), p.per_vertex.end());
  for (int i = 0; i < n; ++i)
    if (!touched[i]) p.almost_isolated.push_back(i + 1);
  return p;
}

WeightedHypergraph parse_hypergraph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("hypergraph file: ") + e.what());
  }
  try {
    if (!j.is_object()) throw InvalidArgument("hypergraph file: top level must be an object");
    const auto& nj = j.at("n");
    if (!nj.is_number_integer()) throw InvalidArgument("hypergraph file: n must be an integer");
    const int n = nj.get<int>();
    WeightedHypergraph h(n);
    for (const auto& e : j.at("edges")) {
      std::vector<int> vs = e.at("vertices").get<std::vector<int>>();
      std::vector<int> sorted = vs;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("hypergraph file: repeated vertex in an edge");
      const auto& wj = e.at("weight");
      if (!wj.is_number()) throw InvalidArgument("hypergraph file: weight must be a number");
      h.add_edge(set_from_list(vs, n), wj.get<double>());
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("hypergraph file: ") + e.what());
  }
}

WeightedHypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read hypergraph file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_hypergraph(ss.str());
}

std::string serialize_hypergraph(const WeightedHypergraph& h) {
  ojson j;
  j["n"] = h.n();
  auto edges = ojson::array();
  for (const auto& [b, c] : h.edges()) {
    ojson e;
    e["vertices"] = set_to_list(b);
    e["weight"] = c;
    edges.push_back(e);
  }
  j["edges"] = edges;
  return dump_json(j) + "\n";
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::pair<GeneratorKind, const char*>> kKindNames = {
    {GeneratorKind::CompleteGraph, "complete_graph"}, {GeneratorKind::MeanField, "mean_field"},
    {GeneratorKind::PairsRandom, "pairs_random"},     {GeneratorKind::TopHeavy, "top_heavy"},
    {GeneratorKind::Akp, "akp"},                      {GeneratorKind::Random, "random"},
};

const std::vector<std::pair<CaputoClass, const char*>> kClassNames = {
    {CaputoClass::Pairs, "pairs"},
    {CaputoClass::Tuples, "tuples"},
    {CaputoClass::MeanField, "mean_field"},
    {CaputoClass::Akp, "akp"},
};

class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double weight() { return 0.25 + 3.75 * uniform(); }
  bool coin(double p) { return uniform() < p; }

private:
  std::mt19937_64 rng_;
};

// All subsets of [n] in canonical order, optionally filtered by size.
std::vector<VertexSet> subsets_by_size(int n, int min_size, int max_size) {
  std::vector<VertexSet> out;
  for (VertexSet b = 0; b <= full_set(n); ++b) {
    const int k = set_size(b);
    if (k >= min_size && k <= max_size) out.push_back(b);
    if (b == full_set(n)) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::string generator_name(GeneratorKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames)
    if (name == n) return kind;
  throw InvalidArgument("unknown hypergraph generator: " + std::string(name));
}

const std::vector<GeneratorKind>& all_generator_kinds() {
  static const std::vector<GeneratorKind> kinds = [] {
    std::vector<GeneratorKind> v;
    for (const auto& [kind, name] : kKindNames) v.push_back(kind);
    return v;
  }();
  return kinds;
}

WeightedHypergraph generate(GeneratorKind kind, const GeneratorParams& params, std::uint64_t seed) {
  const int n = params.n;
  if (n < 2 || n > 16) throw InvalidArgument("generators support 2 ≤ n ≤ 16");
  WeightedHypergraph h(n);
  Draw draw(seed);
  switch (kind) {
    case GeneratorKind::CompleteGraph:
      for (VertexSet b : subsets_by_size(n, 2, 2)) h.add_edge(b, 1.0);
      break;

    case GeneratorKind::MeanField: {
      std::map<int, double> f;
      if (params.mean_field_f) {
        f = *params.mean_field_f;
        for (const auto& [k, v] : f)
          if (k < 1 || k > n || !std::isfinite(v) || v < 0.0)
            throw InvalidArgument("mean_field: bad size or weight for |B| = " + std::to_string(k));
      } else {
        for (int k = 2; k <= n; ++k) f[k] = draw.weight();
      }
      for (VertexSet b : subsets_by_size(n, 1, n))
        if (auto it = f.find(set_size(b)); it != f.end() && it->second > 0.0) h.add_edge(b, it->second);
      break;
    }

    case GeneratorKind::PairsRandom: {
      bool any_pair = false;
      for (VertexSet b : subsets_by_size(n, 1, 2)) {
        const bool pair = set_size(b) == 2;
        if (draw.coin(pair ? 0.75 : 0.25)) {
          h.add_edge(b, draw.weight());
          any_pair = any_pair || pair;
        }
      }
      if (!any_pair) h.add_edge(0b11u, draw.weight());
      break;
    }

    case GeneratorKind::TopHeavy: {
      bool any_proper = false;
      for (VertexSet b : subsets_by_size(n, n - 1, n))
        if (draw.coin(0.75)) {
          h.add_edge(b, draw.weight());
          any_proper = any_proper || b != full_set(n);
        }
      if (!any_proper) h.add_edge(full_set(n - 1), draw.weight());
      break;
    }

    case GeneratorKind::Akp: {
      VertexSet b0 = 0;
      if (params.akp_anchor) {
        b0 = *params.akp_anchor;
        if (b0 & ~full_set(n)) throw InvalidArgument("akp: anchor outside [n]");
      } else {
        const int cap = std::max(0, n - 2);
        for (int i = 0; i < n; ++i)
          if (set_size(b0) < cap && draw.coin(0.4)) b0 |= 1u << i;
      }
      std::vector<VertexSet> candidates;
      for (VertexSet b : subsets_by_size(n, 1, n))
        if ((b & b0) == b0 && set_size(b & ~b0) <= 2 && set_size(b) >= 2) candidates.push_back(b);
      bool any = false;
      for (VertexSet b : candidates)
        if (draw.coin(0.6)) {
          h.add_edge(b, draw.weight());
          any = true;
        }
      if (!any && !candidates.empty()) h.add_edge(candidates.front(), draw.weight());
      break;
    }

    case GeneratorKind::Random:
      for (VertexSet b : subsets_by_size(n, 2, n))
        if (draw.coin(0.5)) h.add_edge(b, draw.weight());
      if (h.support().empty()) h.add_edge(full_set(n), draw.weight());
      break;
  }
  return h;
}

std::string caputo_class_name(CaputoClass c) {
  for (const auto& [cls, name] : kClassNames)
    if (cls == c) return name;
  return "unknown";
}

CaputoClass parse_caputo_class(std::string_view name) {
  for (const auto& [cls, n] : kClassNames)
    if (name == n) return cls;
  throw InvalidArgument("unknown hypergraph class: " + std::string(name) +
                        " (expected pairs, tuples, mean_field or akp)");
}

bool is_pairs(const WeightedHypergraph& h) {
  for (VertexSet b : h.support())
    if (set_size(b) > 2) return false;
  return true;
}

bool is_tuples(const WeightedHypergraph& h) {
  for (VertexSet b : h.support())
    if (set_size(b) < h.n() - 1) return false;
  return true;
}

bool is_mean_field(const WeightedHypergraph& h) {
  const int n = h.n();
  std::vector<std::optional<double>> level(n + 1);
  std::vector<std::uint64_t> count(n + 1, 0);
  for (VertexSet b : h.support()) {
    const int k = set_size(b);
    const double c = h.weight(b);
    if (!level[k]) level[k] = c;
    else if (std::abs(*level[k] - c) > 1e-12 * std::max(1.0, std::abs(c))) return false;
    ++count[k];
  }
  // Every subset of a weighted size must carry the weight.
  for (int k = 1; k <= n; ++k) {
    if (!level[k]) continue;
    std::uint64_t binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (count[k] != binom) return false;
  }
  return true;
}

std::optional<VertexSet> akp_anchor(const WeightedHypergraph& h) {
  const auto support = h.support();
  VertexSet b0 = full_set(h.n());
  for (VertexSet b : support) b0 &= b;
  if (support.empty()) b0 = 0;
  for (VertexSet b : support)
    if (set_size(b & ~b0) > 2) return std::nullopt;
  return b0;
}

bool in_class(const WeightedHypergraph& h, CaputoClass c) {
  switch (c) {
    case CaputoClass::Pairs: return is_pairs(h);
    case CaputoClass::Tuples: return is_tuples(h);
    case CaputoClass::MeanField: return is_mean_field(h);
    case CaputoClass::Akp: return akp_anchor(h).has_value();
  }
  return false;
}

std::vector<CaputoClass> classes_of(const WeightedHypergraph& h) {
  std::vector<CaputoClass> out;
  for (const auto& [cls, name] : kClassNames)
    if (in_class(h, cls)) out.push_back(cls);
  return out;
}

}  // namespace wreathgap::hypergraph
