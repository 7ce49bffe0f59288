#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace sdpdeg {

/// Weakly decreasing sequence of positive parts. Trailing zeros are
/// dropped on construction, so (2,1,0) and (2,1) are the same partition.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on a negative or increasing part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  /// i-th part, zero past the length.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Parts padded with zeros to exactly `len` entries (len >= length()).
  std::vector<int> padded(std::size_t len) const;

  /// "(a,b,c)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Strictly increasing list of nonnegative integers.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  int max() const { return indices_.empty() ? -1 : indices_.back(); }

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> indices_;
};

/// {0, 1, ..., upper} with `removed` taken out.
IndexSet range_without(int upper, std::vector<int> removed);

/// lambda(I) = (i_r - (r-1), ..., i_2 - 1, i_1).
Partition lambda_of(const IndexSet& index_set);

/// The unique r-element I with lambda_of(I) == lam. Throws if lam has more than r parts.
IndexSet index_set_of(const Partition& lam, int r);

/// Partitions of `weight` with at most max_len parts, each at most max_part
/// (nullopt = unbounded), in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int weight, int max_len, std::optional<int> max_part = std::nullopt);

/// (a^count) convenience: parts repeated `count` times.
Partition rectangle(int part, int count);

}  // namespace sdpdeg
