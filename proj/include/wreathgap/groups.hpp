#pragma once
// Permutations, finite base groups given by tables, and the wreath product
// W_n = G^n ⋊ S_n with its subgroups S_B, G^B and W_B.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wreathgap/linalg.hpp"

namespace wreathgap {

/// Subset of [n] as a bitmask; bit (i-1) stands for vertex i. n ≤ 20.
using VertexSet = std::uint32_t;
inline constexpr int kMaxVertices = 20;

inline int set_size(VertexSet b) { return __builtin_popcount(b); }
inline bool contains(VertexSet b, int vertex0) { return (b >> vertex0) & 1u; }
inline VertexSet full_set(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }
/// 1-based sorted vertex list.
std::vector<int> set_to_list(VertexSet b);
VertexSet set_from_list(const std::vector<int>& vertices_one_based, int n);
/// "{1,2,4}"
std::string set_to_string(VertexSet b);

}  // namespace wreathgap

namespace wreathgap::groups {

/// A bijection of {0, …, n-1}. Printed and parsed 1-based. Permutations act on
/// the left: compose(a, b)(i) = a(b(i)).
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidArgument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation from_one_based(const std::vector<int>& images);
  /// Swap of the 0-based points i and j.
  static Permutation transposition(int n, int i, int j);
  /// Cycles given 1-based, e.g. {{1,2,3}} for 1→2→3→1.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int fixed_points() const;
  /// Disjoint cycle notation, 1-based; "e" for the identity.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

/// (a∘b)(i) = a(b(i)). Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// Lexicographic rank of the image sequence in S_n.
std::uint64_t lex_rank(const Permutation& p);
Permutation lex_unrank(int n, std::uint64_t rank);
/// All of S_n in lexicographic order of image sequences.
std::vector<Permutation> all_permutations(int n);

/// One unitary irreducible matrix representation of the base group.
struct GroupIrrep {
  int dim = 1;
  std::vector<CMatrix> matrices;  // indexed by element
};

/// A finite group as an explicit multiplication table with a complete list of
/// unitary irreducible representations. Immutable once validated.
class FiniteGroupTable {
public:
  /// Validates closure, identity, inverses, associativity (exhaustive for
  /// order ≤ 24, 500 sampled triples above), and the irreps: unitary,
  /// homomorphic, irrep 0 trivial, Σ dim² = order, orthonormal characters.
  FiniteGroupTable(std::string name, std::vector<std::vector<int>> mult, int identity,
                   std::vector<int> generators, std::vector<GroupIrrep> irreps);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(mult_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return mult_[a][b]; }
  int inverse(int a) const { return inverses_[a]; }
  const std::vector<int>& generators() const { return generators_; }

  std::size_t num_irreps() const { return irreps_.size(); }
  const GroupIrrep& irrep(std::size_t theta) const { return irreps_[theta]; }
  const CMatrix& irrep_matrix(std::size_t theta, int g) const { return irreps_[theta].matrices[g]; }
  Complex character(std::size_t theta, int g) const { return characters_[theta][g]; }

  /// Table and irreps in the group file format.
  std::string to_json() const;

private:
  std::string name_;
  std::vector<std::vector<int>> mult_;
  int identity_ = 0;
  std::vector<int> inverses_;
  std::vector<int> generators_;
  std::vector<GroupIrrep> irreps_;
  std::vector<std::vector<Complex>> characters_;
};

using GroupPtr = std::shared_ptr<const FiniteGroupTable>;

/// "C1".."C12" (cyclic, characters exp(2πi·jg/k)), "S3" (trivial, sign and the
/// 2-dimensional orthogonal standard representation), "K4" (Klein four-group).
GroupPtr builtin_group(std::string_view name);
/// Parses the JSON group file format; validation errors throw InvalidArgument.
GroupPtr parse_group_file(std::string_view text, std::string name = "file");
/// A builtin name, or a path to a group file.
GroupPtr load_group(const std::string& name_or_path);

/// (g; σ) with g ∈ G^n stored as element indices and σ ∈ S_n.
struct WreathElement {
  std::vector<int> gvec;
  Permutation perm;

  int degree() const { return perm.degree(); }
  auto operator<=>(const WreathElement&) const = default;
};

WreathElement wreath_identity(const FiniteGroupTable& g, int n);
/// (e; σ)
WreathElement embed_permutation(const FiniteGroupTable& g, const Permutation& sigma);
/// (g; e)
WreathElement embed_base(std::vector<int> gvec);

/// (g; σ)(h; τ) = (g · (h ∘ σ⁻¹); στ), i.e. coordinate i is g_i · h_{σ⁻¹(i)}.
WreathElement wreath_multiply(const FiniteGroupTable& g, const WreathElement& x,
                              const WreathElement& y);
WreathElement wreath_inverse(const FiniteGroupTable& g, const WreathElement& x);
/// π((g; σ)) = σ
inline const Permutation& project(const WreathElement& x) { return x.perm; }

/// n×n monomial matrix over G: entry(r, c) = g_r when r = σ(c), else -1.
struct MonomialMatrix {
  int n = 0;
  std::vector<int> entries;
  int entry(int r, int c) const { return entries[r * n + c]; }
  bool operator==(const MonomialMatrix&) const = default;
};
MonomialMatrix to_monomial(const WreathElement& x);
MonomialMatrix monomial_multiply(const FiniteGroupTable& g, const MonomialMatrix& a,
                                 const MonomialMatrix& b);

enum class SubgroupKind { Symmetric, Base, Wreath };  // S_B, G^B, W_B

/// Every element of the subgroup exactly once, in a fixed order.
std::vector<WreathElement> subgroup_elements(SubgroupKind kind, VertexSet b,
                                             const FiniteGroupTable& g, int n);
/// Adjacent transpositions within B (consecutive members of B) and, for the
/// G-carrying kinds, each G-generator placed at each coordinate of B.
std::vector<WreathElement> subgroup_generators(SubgroupKind kind, VertexSet b,
                                               const FiniteGroupTable& g, int n);
std::uint64_t subgroup_order(SubgroupKind kind, int b_size, int group_order);

/// W_n with every element indexed, for regular representations.
/// index = lex_rank(σ) · |G|^n + Σ_i g_i · |G|^i.
class WreathGroup {
public:
  WreathGroup(GroupPtr base, int n);

  const FiniteGroupTable& base() const { return *base_; }
  const GroupPtr& base_ptr() const { return base_; }
  int degree() const { return n_; }
  std::uint64_t order() const { return order_; }

  WreathElement element(std::uint64_t index) const;
  std::uint64_t index(const WreathElement& x) const;

private:
  GroupPtr base_;
  int n_;
  std::uint64_t base_power_;
  std::uint64_t order_;
};

}  // namespace wreathgap::groups
