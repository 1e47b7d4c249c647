#include "wreathgap/combinatorics.hpp"

#include <charconv>

#include "wreathgap/linalg.hpp"

namespace wreathgap::combinatorics {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text == "∅" || text == "()" || text.empty()) return Partition{};
  if (text.front() != '(' || text.back() != ')')
    throw InvalidArgument("partition label must look like (2,1): " + std::string(text));
  text = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = trim(text.substr(0, comma));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidArgument("bad partition part: " + std::string(tok));
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::vector<int> StandardTableau::row_of() const {
  std::vector<int> out(shape.size() + 1, -1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int v : rows[r]) out[v] = static_cast<int>(r);
  return out;
}

std::vector<int> StandardTableau::col_of() const {
  std::vector<int> out(shape.size() + 1, -1);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) out[row[c]] = static_cast<int>(c);
  return out;
}

MultiPartition::MultiPartition(std::vector<Partition> slots) : slots_(std::move(slots)) {
  for (const auto& p : slots_) order_ += p.size();
}

std::vector<std::size_t> MultiPartition::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (!slots_[i].empty()) s.push_back(i);
  return s;
}

std::string MultiPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i) s += '|';
    s += slots_[i].to_string();
  }
  return s;
}

MultiPartition MultiPartition::parse(std::string_view text) {
  std::vector<Partition> slots;
  while (true) {
    const auto bar = text.find('|');
    slots.push_back(Partition::parse(text.substr(0, bar)));
    if (bar == std::string_view::npos) break;
    text.remove_prefix(bar + 1);
  }
  return MultiPartition(std::move(slots));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

void multipartitions_rec(int slot, int num_slots, int remaining, std::vector<Partition>& current,
                         std::vector<MultiPartition>& out) {
  if (slot == num_slots - 1) {
    for (auto& p : enumerate_partitions(remaining)) {
      current.push_back(std::move(p));
      out.emplace_back(current);
      current.pop_back();
    }
    return;
  }
  for (int m = remaining; m >= 0; --m) {
    for (auto& p : enumerate_partitions(m)) {
      current.push_back(std::move(p));
      multipartitions_rec(slot + 1, num_slots, remaining - m, current, out);
      current.pop_back();
    }
  }
}

void tableaux_rec(const std::vector<int>& shape, int n,
                  std::vector<std::vector<int>>& rows, std::vector<StandardTableau>& out,
                  const Partition& full_shape) {
  if (n == 0) {
    out.push_back({full_shape, rows});
    return;
  }
  // Removable corners, lowest row first.
  for (int r = static_cast<int>(shape.size()) - 1; r >= 0; --r) {
    if (shape[r] == 0) continue;
    const bool corner = r + 1 >= static_cast<int>(shape.size()) || shape[r + 1] < shape[r];
    if (!corner) continue;
    std::vector<int> smaller = shape;
    --smaller[r];
    rows[r][shape[r] - 1] = n;
    tableaux_rec(smaller, n - 1, rows, out, full_shape);
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m) {
  if (m < 0) throw InvalidArgument("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(m, m, current, out);
  return out;
}

std::vector<MultiPartition> enumerate_multipartitions(int num_slots, int n) {
  if (num_slots < 1) throw InvalidArgument("multi-partitions need at least one slot");
  if (n < 0) throw InvalidArgument("multi-partition order must be nonnegative");
  std::vector<MultiPartition> out;
  std::vector<Partition> current;
  multipartitions_rec(0, num_slots, n, current, out);
  return out;
}

TableauxResult tableaux_and_dimension(const Partition& shape) {
  if (shape.empty()) throw InvalidArgument("tableaux of the empty shape are not defined here");
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(len, 0);
  TableauxResult result;
  tableaux_rec(shape.parts(), shape.size(), rows, result.tableaux, shape);
  result.dimension = result.tableaux.size();
  return result;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace wreathgap::combinatorics
