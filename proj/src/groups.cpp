#include "wreathgap/groups.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wreathgap/combinatorics.hpp"

namespace wreathgap {

std::vector<int> set_to_list(VertexSet b) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(b, i)) out.push_back(i + 1);
  return out;
}

VertexSet set_from_list(const std::vector<int>& vertices, int n) {
  VertexSet b = 0;
  for (int v : vertices) {
    if (v < 1 || v > n) throw InvalidArgument("vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    b |= 1u << (v - 1);
  }
  return b;
}

std::string set_to_string(VertexSet b) {
  std::string s = "{";
  bool first = true;
  for (int v : set_to_list(b)) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace wreathgap

namespace wreathgap::groups {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw InvalidArgument("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> im(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) im[i] = images[i] - 1;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int from = cyc[k] - 1, to = cyc[(k + 1) % cyc.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) throw InvalidArgument("cycle entry out of range");
      im[from] = to;
    }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::fixed_points() const {
  int f = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) f += images_[i] == static_cast<int>(i);
  return f;
}

std::string Permutation::to_string() const {
  std::string s;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    s += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = 1;
      if (!first) s += ' ';
      s += std::to_string(i + 1);
      first = false;
      i = images_[i];
    }
    s += ')';
  }
  return s.empty() ? "e" : s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("composing permutations of different degree");
  std::vector<int> im(a.degree());
  for (int i = 0; i < a.degree(); ++i) im[i] = a(b(i));
  return Permutation(std::move(im));
}

std::uint64_t lex_rank(const Permutation& p) {
  const int n = p.degree();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p(j) < p(i);
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) {
    im[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kUnitaryTol = 1e-9;

[[noreturn]] void invalid(const std::string& what) { throw InvalidArgument("group table: " + what); }

}  // namespace

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::vector<int>> mult,
                                   int identity, std::vector<int> generators,
                                   std::vector<GroupIrrep> irreps)
    : name_(std::move(name)),
      mult_(std::move(mult)),
      identity_(identity),
      generators_(std::move(generators)),
      irreps_(std::move(irreps)) {
  const int k = static_cast<int>(mult_.size());
  if (k < 1) invalid("order must be at least 1");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != k) invalid("multiplication table is not square");
    std::vector<char> seen(k, 0);
    for (int v : row) {
      if (v < 0 || v >= k) invalid("multiplication table entry out of range");
      if (seen[v]) invalid("multiplication table row is not a permutation");
      seen[v] = 1;
    }
  }
  if (identity_ < 0 || identity_ >= k) invalid("identity index out of range");
  for (int a = 0; a < k; ++a)
    if (mult_[identity_][a] != a || mult_[a][identity_] != a) invalid("identity element is not neutral");

  inverses_.assign(k, -1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (mult_[a][b] == identity_) inverses_[a] = b;
  for (int a = 0; a < k; ++a)
    if (inverses_[a] < 0 || mult_[inverses_[a]][a] != identity_) invalid("missing two-sided inverse");

  auto assoc = [&](int a, int b, int c) {
    if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]]) invalid("multiplication is not associative");
  };
  if (k <= 24) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (int t = 0; t < 500; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }
  for (int g : generators_)
    if (g < 0 || g >= k) invalid("generator index out of range");

  if (irreps_.empty()) invalid("no irreducible representations supplied");
  long dim2 = 0;
  for (std::size_t t = 0; t < irreps_.size(); ++t) {
    const auto& rep = irreps_[t];
    if (rep.dim < 1) invalid("irrep dimension must be positive");
    if (static_cast<int>(rep.matrices.size()) != k) invalid("irrep must give one matrix per element");
    for (const auto& m : rep.matrices) {
      if (static_cast<int>(m.rows()) != rep.dim || static_cast<int>(m.cols()) != rep.dim)
        invalid("irrep matrix has the wrong shape");
      if (unitarity_defect(m) > kUnitaryTol * rep.dim) invalid("irrep matrix is not unitary");
    }
    auto hom = [&](int a, int b) {
      if (max_abs_diff(rep.matrices[mult_[a][b]], rep.matrices[a] * rep.matrices[b]) > 1e-9)
        invalid("irrep " + std::to_string(t) + " is not a homomorphism");
    };
    if (k <= 24) {
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) hom(a, b);
    } else {
      std::mt19937_64 rng(0xbeef + t);
      std::uniform_int_distribution<int> pick(0, k - 1);
      for (int s = 0; s < 200; ++s) hom(pick(rng), pick(rng));
    }
    dim2 += static_cast<long>(rep.dim) * rep.dim;
  }
  const auto& triv = irreps_[0];
  if (triv.dim != 1) invalid("irrep 0 must be the trivial representation");
  for (const auto& m : triv.matrices)
    if (std::abs(m(0, 0) - Complex(1.0)) > kUnitaryTol) invalid("irrep 0 must be the trivial representation");
  if (dim2 != k) invalid("irreps are incomplete: sum of squared dimensions " + std::to_string(dim2) +
                         " differs from the order " + std::to_string(k));

  characters_.resize(irreps_.size());
  for (std::size_t t = 0; t < irreps_.size(); ++t) {
    characters_[t].resize(k);
    for (int g = 0; g < k; ++g) characters_[t][g] = wreathgap::trace(irreps_[t].matrices[g]);
  }
  for (std::size_t a = 0; a < irreps_.size(); ++a)
    for (std::size_t b = a; b < irreps_.size(); ++b) {
      Complex ip = 0.0;
      for (int g = 0; g < k; ++g) ip += characters_[a][g] * std::conj(characters_[b][g]);
      ip /= static_cast<double>(k);
      if (std::abs(ip - Complex(a == b ? 1.0 : 0.0)) > 1e-8)
        invalid("irrep characters are not orthonormal (reducible or repeated irreps)");
    }
}

std::string FiniteGroupTable::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order();
  j["mult"] = mult_;
  j["identity"] = identity_;
  j["generators"] = generators_;
  auto irreps = nlohmann::ordered_json::array();
  for (const auto& rep : irreps_) {
    nlohmann::ordered_json r;
    r["dim"] = rep.dim;
    auto mats = nlohmann::ordered_json::array();
    for (const auto& m : rep.matrices) {
      auto rows = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(i, c).real(), m(i, c).imag()});
        rows.push_back(row);
      }
      mats.push_back(rows);
    }
    r["matrices"] = mats;
    irreps.push_back(r);
  }
  j["irreps"] = irreps;
  return j.dump();
}

namespace {

// Images of every element from generator images, by breadth-first search over
// right multiplication by generators.
std::vector<CMatrix> extend_from_generators(const std::vector<std::vector<int>>& mult, int identity,
                                            const std::vector<int>& gens,
                                            const std::vector<CMatrix>& gen_images) {
  const int k = static_cast<int>(mult.size());
  std::vector<CMatrix> out(k);
  std::vector<char> done(k, 0);
  out[identity] = CMatrix::identity(gen_images.front().rows());
  done[identity] = 1;
  std::deque<int> queue{identity};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const int y = mult[x][gens[s]];
      if (done[y]) continue;
      out[y] = out[x] * gen_images[s];
      done[y] = 1;
      queue.push_back(y);
    }
  }
  return out;
}

GroupPtr cyclic(int k) {
  std::vector<std::vector<int>> mult(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) mult[a][b] = (a + b) % k;
  std::vector<GroupIrrep> irreps;
  for (int j = 0; j < k; ++j) {
    GroupIrrep rep;
    for (int g = 0; g < k; ++g) {
      CMatrix m(1, 1);
      // Integer phase reduction keeps χ_j(g) exact at the lattice points ±1, ±i.
      const int e = (j * g) % k;
      if (e == 0) m(0, 0) = 1.0;
      else if (2 * e == k) m(0, 0) = -1.0;
      else if (4 * e == k) m(0, 0) = Complex(0.0, 1.0);
      else if (4 * e == 3 * k) m(0, 0) = Complex(0.0, -1.0);
      else m(0, 0) = std::polar(1.0, 2.0 * std::numbers::pi * e / k);
      rep.matrices.push_back(m);
    }
    irreps.push_back(std::move(rep));
  }
  std::vector<int> gens;
  if (k > 1) gens.push_back(1);
  return std::make_shared<FiniteGroupTable>("C" + std::to_string(k), std::move(mult), 0,
                                            std::move(gens), std::move(irreps));
}

GroupPtr symmetric3() {
  const auto perms = all_permutations(3);
  const int k = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mult(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) mult[a][b] = static_cast<int>(lex_rank(compose(perms[a], perms[b])));
  const int s1 = static_cast<int>(lex_rank(Permutation::transposition(3, 0, 1)));
  const int s2 = static_cast<int>(lex_rank(Permutation::transposition(3, 1, 2)));
  const std::vector<int> gens{s1, s2};

  auto scalar = [](double v) {
    CMatrix m(1, 1);
    m(0, 0) = v;
    return m;
  };
  // Orthogonal form on the tableaux [[1,2],[3]] and [[1,3],[2]].
  const double h = std::sqrt(3.0) / 2.0;
  CMatrix t1(2, 2), t2(2, 2);
  t1(0, 0) = 1.0;
  t1(1, 1) = -1.0;
  t2(0, 0) = -0.5;
  t2(0, 1) = h;
  t2(1, 0) = h;
  t2(1, 1) = 0.5;

  std::vector<GroupIrrep> irreps(3);
  irreps[0] = {1, extend_from_generators(mult, 0, gens, {scalar(1.0), scalar(1.0)})};
  irreps[1] = {1, extend_from_generators(mult, 0, gens, {scalar(-1.0), scalar(-1.0)})};
  irreps[2] = {2, extend_from_generators(mult, 0, gens, {t1, t2})};
  return std::make_shared<FiniteGroupTable>("S3", std::move(mult), 0, gens, std::move(irreps));
}

GroupPtr klein4() {
  std::vector<std::vector<int>> mult(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mult[a][b] = a ^ b;
  std::vector<GroupIrrep> irreps;
  for (int chi = 0; chi < 4; ++chi) {
    GroupIrrep rep;
    for (int g = 0; g < 4; ++g) {
      CMatrix m(1, 1);
      m(0, 0) = (__builtin_popcount(chi & g) % 2) ? -1.0 : 1.0;
      rep.matrices.push_back(m);
    }
    irreps.push_back(std::move(rep));
  }
  return std::make_shared<FiniteGroupTable>("K4", std::move(mult), 0, std::vector<int>{1, 2},
                                            std::move(irreps));
}

Complex parse_entry(const nlohmann::json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw InvalidArgument("group file: matrix entries must be numbers or [re, im] pairs");
}

}  // namespace

namespace {

GroupPtr make_builtin(std::string_view name) {
  if (name == "S3") return symmetric3();
  if (name == "K4") return klein4();
  if (name.size() >= 2 && name[0] == 'C') {
    int k = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') throw InvalidArgument("unknown builtin group: " + std::string(name));
      k = 10 * k + (c - '0');
    }
    if (k >= 1 && k <= 12) return cyclic(k);
  }
  throw InvalidArgument("unknown builtin group: " + std::string(name));
}

}  // namespace

GroupPtr builtin_group(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, GroupPtr, std::less<>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  GroupPtr g = make_builtin(name);
  cache.emplace(std::string(name), g);
  return g;
}

GroupPtr parse_group_file(std::string_view text, std::string name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("group file: ") + e.what());
  }
  try {
    const int order = j.at("order").get<int>();
    auto mult = j.at("mult").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(mult.size()) != order) throw InvalidArgument("group file: order does not match table size");
    const int identity = j.value("identity", 0);
    auto gens = j.value("generators", std::vector<int>{});
    std::vector<GroupIrrep> irreps;
    for (const auto& r : j.at("irreps")) {
      GroupIrrep rep;
      rep.dim = r.at("dim").get<int>();
      for (const auto& mj : r.at("matrices")) {
        if (!mj.is_array() || static_cast<int>(mj.size()) != rep.dim)
          throw InvalidArgument("group file: matrix row count does not match dim");
        CMatrix m(rep.dim, rep.dim);
        for (int row = 0; row < rep.dim; ++row) {
          const auto& rj = mj[row];
          if (!rj.is_array() || static_cast<int>(rj.size()) != rep.dim)
            throw InvalidArgument("group file: matrix column count does not match dim");
          for (int c = 0; c < rep.dim; ++c) m(row, c) = parse_entry(rj[c]);
        }
        rep.matrices.push_back(std::move(m));
      }
      irreps.push_back(std::move(rep));
    }
    return std::make_shared<FiniteGroupTable>(std::move(name), std::move(mult), identity,
                                              std::move(gens), std::move(irreps));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("group file: ") + e.what());
  }
}

GroupPtr load_group(const std::string& name_or_path) {
  try {
    return builtin_group(name_or_path);
  } catch (const InvalidArgument&) {
  }
  std::ifstream in(name_or_path);
  if (!in) throw InvalidArgument("unknown group (not a builtin name or readable file): " + name_or_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str(), name_or_path);
}

// ---------------------------------------------------------------------------

WreathElement wreath_identity(const FiniteGroupTable& g, int n) {
  return {std::vector<int>(n, g.identity()), Permutation::identity(n)};
}

WreathElement embed_permutation(const FiniteGroupTable& g, const Permutation& sigma) {
  return {std::vector<int>(sigma.degree(), g.identity()), sigma};
}

WreathElement embed_base(std::vector<int> gvec) {
  const int n = static_cast<int>(gvec.size());
  return {std::move(gvec), Permutation::identity(n)};
}

WreathElement wreath_multiply(const FiniteGroupTable& g, const WreathElement& x,
                              const WreathElement& y) {
  const int n = x.degree();
  if (y.degree() != n || static_cast<int>(x.gvec.size()) != n || static_cast<int>(y.gvec.size()) != n)
    throw InvalidArgument("wreath product of elements of different degree");
  const Permutation sigma_inv = x.perm.inverse();
  WreathElement out{std::vector<int>(n), compose(x.perm, y.perm)};
  for (int i = 0; i < n; ++i) {
    const int gi = x.gvec[i], hj = y.gvec[sigma_inv(i)];
    if (gi < 0 || gi >= g.order() || hj < 0 || hj >= g.order())
      throw InvalidArgument("wreath element entry outside the base group");
    out.gvec[i] = g.multiply(gi, hj);
  }
  return out;
}

WreathElement wreath_inverse(const FiniteGroupTable& g, const WreathElement& x) {
  const int n = x.degree();
  WreathElement out{std::vector<int>(n), x.perm.inverse()};
  for (int j = 0; j < n; ++j) out.gvec[j] = g.inverse(x.gvec[x.perm(j)]);
  return out;
}

MonomialMatrix to_monomial(const WreathElement& x) {
  const int n = x.degree();
  MonomialMatrix m{n, std::vector<int>(n * n, -1)};
  for (int c = 0; c < n; ++c) {
    const int r = x.perm(c);
    m.entries[r * n + c] = x.gvec[r];
  }
  return m;
}

MonomialMatrix monomial_multiply(const FiniteGroupTable& g, const MonomialMatrix& a,
                                 const MonomialMatrix& b) {
  const int n = a.n;
  MonomialMatrix out{n, std::vector<int>(n * n, -1)};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < n; ++k) {
        const int x = a.entry(r, k), y = b.entry(k, c);
        if (x >= 0 && y >= 0) out.entries[r * n + c] = g.multiply(x, y);
      }
  return out;
}

namespace {

void check_subset(VertexSet b, int n) {
  if (n < 0 || n > kMaxVertices) throw InvalidArgument("degree outside the supported range");
  if (b & ~full_set(n)) throw InvalidArgument("subset " + set_to_string(b) + " is not contained in [n]");
}

std::vector<int> zero_based_members(VertexSet b) {
  std::vector<int> m;
  for (int v : set_to_list(b)) m.push_back(v - 1);
  return m;
}

}  // namespace

std::vector<WreathElement> subgroup_elements(SubgroupKind kind, VertexSet b,
                                             const FiniteGroupTable& g, int n) {
  check_subset(b, n);
  const std::vector<int> members = zero_based_members(b);
  const std::size_t m = members.size();

  std::vector<Permutation> perms;
  if (kind == SubgroupKind::Base) {
    perms.push_back(Permutation::identity(n));
  } else {
    std::vector<int> arrangement = members;
    do {
      std::vector<int> im(n);
      for (int i = 0; i < n; ++i) im[i] = i;
      for (std::size_t j = 0; j < m; ++j) im[members[j]] = arrangement[j];
      perms.emplace_back(std::move(im));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }

  std::vector<std::vector<int>> gvecs;
  if (kind == SubgroupKind::Symmetric) {
    gvecs.emplace_back(n, g.identity());
  } else {
    // Odometer over G^B; coordinate values are group element indices.
    std::vector<int> digits(m, 0);
    while (true) {
      std::vector<int> gv(n, g.identity());
      for (std::size_t j = 0; j < m; ++j) gv[members[j]] = digits[j];
      gvecs.push_back(std::move(gv));
      std::size_t pos = 0;
      while (pos < m && ++digits[pos] == g.order()) digits[pos++] = 0;
      if (pos == m) break;
    }
  }

  std::vector<WreathElement> out;
  out.reserve(perms.size() * gvecs.size());
  for (const auto& p : perms)
    for (const auto& gv : gvecs) out.push_back({gv, p});
  return out;
}

std::vector<WreathElement> subgroup_generators(SubgroupKind kind, VertexSet b,
                                               const FiniteGroupTable& g, int n) {
  check_subset(b, n);
  const std::vector<int> members = zero_based_members(b);
  std::vector<WreathElement> out;
  if (kind != SubgroupKind::Base)
    for (std::size_t j = 0; j + 1 < members.size(); ++j)
      out.push_back(embed_permutation(g, Permutation::transposition(n, members[j], members[j + 1])));
  if (kind != SubgroupKind::Symmetric)
    for (int coord : members)
      for (int gen : g.generators()) {
        std::vector<int> gv(n, g.identity());
        gv[coord] = gen;
        out.push_back(embed_base(std::move(gv)));
      }
  return out;
}

std::uint64_t subgroup_order(SubgroupKind kind, int b_size, int group_order) {
  std::uint64_t s = combinatorics::factorial(b_size);
  std::uint64_t gpow = 1;
  for (int i = 0; i < b_size; ++i) gpow *= static_cast<std::uint64_t>(group_order);
  switch (kind) {
    case SubgroupKind::Symmetric: return s;
    case SubgroupKind::Base: return gpow;
    case SubgroupKind::Wreath: return s * gpow;
  }
  return 0;
}

WreathGroup::WreathGroup(GroupPtr base, int n) : base_(std::move(base)), n_(n) {
  if (n < 1 || n > 12) throw InvalidArgument("wreath group degree outside [1,12]");
  base_power_ = 1;
  for (int i = 0; i < n; ++i) base_power_ *= static_cast<std::uint64_t>(base_->order());
  order_ = base_power_ * combinatorics::factorial(n);
}

WreathElement WreathGroup::element(std::uint64_t index) const {
  const auto k = static_cast<std::uint64_t>(base_->order());
  WreathElement x{std::vector<int>(n_), lex_unrank(n_, index / base_power_)};
  std::uint64_t g = index % base_power_;
  for (int i = 0; i < n_; ++i) {
    x.gvec[i] = static_cast<int>(g % k);
    g /= k;
  }
  return x;
}

std::uint64_t WreathGroup::index(const WreathElement& x) const {
  const auto k = static_cast<std::uint64_t>(base_->order());
  std::uint64_t g = 0;
  for (int i = n_ - 1; i >= 0; --i) g = g * k + static_cast<std::uint64_t>(x.gvec[i]);
  return lex_rank(x.perm) * base_power_ + g;
}

}  // namespace wreathgap::groups
