#pragma once
// Weighted hypergraphs Γ = ([n], c), degree data, file I/O and generators.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wreathgap/groups.hpp"

namespace wreathgap::hypergraph {

/// Nonnegative weights c_B on subsets of [n], 2 ≤ n ≤ 20. Stored edges may have
/// weight zero; the support is the set of positive-weight subsets.
class WeightedHypergraph {
public:
  explicit WeightedHypergraph(int n);

  int n() const { return n_; }
  /// Throws InvalidArgument for B ⊄ [n], negative or non-finite weights, or an
  /// already present subset.
  void add_edge(VertexSet b, double weight);
  double weight(VertexSet b) const;
  bool has_edge(VertexSet b) const { return weights_.count(b) > 0; }

  /// Edges sorted by (|B|, lexicographic vertex list).
  std::vector<std::pair<VertexSet, double>> edges() const;
  /// Positive-weight subsets in edges() order.
  std::vector<VertexSet> support() const;
  double total_weight() const;

  WeightedHypergraph scaled(double s) const;
  /// Image under the vertex relabeling i ↦ σ(i).
  WeightedHypergraph relabeled(const groups::Permutation& sigma) const;

  bool operator==(const WeightedHypergraph&) const = default;

private:
  int n_;
  std::map<VertexSet, double> weights_;
};

struct DegreeProfile {
  std::vector<double> per_vertex;    // index 0 is vertex 1
  double min_degree = 0.0;
  std::vector<int> almost_isolated;  // 1-based
};

/// per_vertex[i] = Σ_{B∋i} c_B. Vertex i is almost-isolated when c_B = 0 for
/// every B ⊊ [n] containing i.
DegreeProfile degree_profile(const WeightedHypergraph& h);

WeightedHypergraph parse_hypergraph(std::string_view text);
WeightedHypergraph load_hypergraph(const std::string& path);
std::string serialize_hypergraph(const WeightedHypergraph& h);

enum class GeneratorKind { CompleteGraph, MeanField, PairsRandom, TopHeavy, Akp, Random };

std::string generator_name(GeneratorKind k);
GeneratorKind parse_generator_kind(std::string_view name);
const std::vector<GeneratorKind>& all_generator_kinds();

struct GeneratorParams {
  int n = 3;
  /// mean_field: f(|B|) for |B| ≥ 1; sizes left out get weight 0. Drawn from
  /// the seed when absent.
  std::optional<std::map<int, double>> mean_field_f;
  /// akp: the anchor B₀. Drawn from the seed when absent.
  std::optional<VertexSet> akp_anchor;
};

/// Deterministic in (kind, params, seed). Random weights lie in [0.25, 4].
WeightedHypergraph generate(GeneratorKind kind, const GeneratorParams& params, std::uint64_t seed);

/// Hypergraph classes with a known three-way spectral equality.
enum class CaputoClass { Pairs, Tuples, MeanField, Akp };

std::string caputo_class_name(CaputoClass c);
CaputoClass parse_caputo_class(std::string_view name);

/// Support on |B| ≤ 2.
bool is_pairs(const WeightedHypergraph& h);
/// Support on |B| ≥ n−1.
bool is_tuples(const WeightedHypergraph& h);
/// c_B depends only on |B| (absent subsets count as weight 0).
bool is_mean_field(const WeightedHypergraph& h);
/// Some B₀ ⊆ every support set with |B∖B₀| ≤ 2; returns the largest such
/// B₀ (the intersection of the support) if one works.
std::optional<VertexSet> akp_anchor(const WeightedHypergraph& h);
bool in_class(const WeightedHypergraph& h, CaputoClass c);
/// Every class Γ belongs to, in enum order.
std::vector<CaputoClass> classes_of(const WeightedHypergraph& h);

}  // namespace wreathgap::hypergraph
