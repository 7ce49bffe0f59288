#include "sdpdeg/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sdpdeg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

std::vector<int> Partition::padded(std::size_t len) const {
  if (len < parts_.size()) throw std::invalid_argument("cannot pad a partition to fewer parts than its length");
  std::vector<int> out = parts_;
  out.resize(len, 0);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ')';
  return out.str();
}

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0) throw std::invalid_argument("index set entries must be nonnegative");
    if (i > 0 && indices_[i] <= indices_[i - 1]) throw std::invalid_argument("index set must be strictly increasing");
  }
}

std::string IndexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) out << (i ? "," : "") << indices_[i];
  out << '}';
  return out.str();
}

IndexSet range_without(int upper, std::vector<int> removed) {
  std::vector<int> out;
  for (int i = 0; i <= upper; ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) out.push_back(i);
  }
  return IndexSet(std::move(out));
}

Partition lambda_of(const IndexSet& index_set) {
  const auto& idx = index_set.indices();
  const int r = index_set.size();
  std::vector<int> parts(r);
  // Largest part first: position j (0-based) reads i_{r-j} - (r-1-j).
  for (int j = 0; j < r; ++j) parts[j] = idx[r - 1 - j] - (r - 1 - j);
  return Partition(std::move(parts));
}

IndexSet index_set_of(const Partition& lam, int r) {
  if (r < 1) throw std::invalid_argument("index_set_of needs r >= 1");
  if (lam.length() > r) throw std::invalid_argument("partition " + lam.to_string() + " has more than r parts");
  std::vector<int> idx(r);
  for (int j = 0; j < r; ++j) idx[j] = lam.part(r - 1 - j) + j;
  return IndexSet(std::move(idx));
}

std::vector<Partition> enumerate_partitions(int weight, int max_len, std::optional<int> max_part) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> current;
  // Parts chosen largest first; trying larger values first yields descending lex order.
  std::function<void(int, int)> extend = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_len) return;
    for (int p = std::min(remaining, bound); p >= 1; --p) {
      current.push_back(p);
      extend(remaining - p, p);
      current.pop_back();
    }
  };
  extend(weight, max_part.value_or(weight));
  return out;
}

Partition rectangle(int part, int count) { return Partition(std::vector<int>(std::max(count, 0), part)); }

}  // namespace sdpdeg
