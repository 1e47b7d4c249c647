#pragma once
// Integer partitions, standard Young tableaux and Irr(G)-indexed multi-partitions.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wreathgap::combinatorics {

/// Weakly decreasing positive parts. The empty partition is the partition of 0.
class Partition {
public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// "(2,1)"; the empty partition renders as "()".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "∅" for the empty partition.
  static Partition parse(std::string_view text);

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// rows[r][c] is the entry in row r, column c (entries 1..size).
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  /// Row index (0-based) of every entry; index 0 is unused.
  std::vector<int> row_of() const;
  std::vector<int> col_of() const;
};

/// One partition per G-irrep slot.
class MultiPartition {
public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> slots);

  const std::vector<Partition>& slots() const { return slots_; }
  const Partition& operator[](std::size_t theta) const { return slots_[theta]; }
  std::size_t num_slots() const { return slots_.size(); }
  int order() const { return order_; }

  /// Slots with a nonempty partition, ascending.
  std::vector<std::size_t> support() const;

  /// "(2)|()" with one entry per slot.
  std::string to_string() const;
  static MultiPartition parse(std::string_view text);

  auto operator<=>(const MultiPartition&) const = default;

private:
  std::vector<Partition> slots_;
  int order_ = 0;
};

/// All partitions of m in reverse-lexicographic order: (m), (m-1,1), ..., (1^m).
std::vector<Partition> enumerate_partitions(int m);

/// Every assignment of partitions to num_slots slots with total size n. Slot 0
/// size runs from n down to 0, each slot in enumerate_partitions order.
std::vector<MultiPartition> enumerate_multipartitions(int num_slots, int n);

struct TableauxResult {
  std::vector<StandardTableau> tableaux;
  std::uint64_t dimension = 0;
};

/// All standard tableaux of a nonempty shape in last-letter order: sorted by
/// the row of the largest entry (lowest row first), ties broken by the next
/// largest entry, and so on. The row-reading tableau comes first.
TableauxResult tableaux_and_dimension(const Partition& shape);

std::uint64_t factorial(int n);

}  // namespace wreathgap::combinatorics
