#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cochange/transaction.hpp"

namespace cochange {

/// Thresholds for mining and rule generation. Both are relative fractions
/// in (0, 1].
struct MiningParams {
  double min_support = 0.2;
  double min_confidence = 0.1;

  /// Smallest admissible support count: max(1, ceil(min_support * n)).
  /// A small slack absorbs the binary representation of decimal fractions
  /// (0.1 * 30 must give 3, not 4).
  std::size_t min_support_count(std::size_t transaction_count) const;

  /// Throws std::invalid_argument when a fraction is out of range.
  void validate() const;
};

/// Canonical itemset ordering: by size, then lexicographic on item ids.
struct ItemsetOrder {
  bool operator()(const std::vector<ItemId>& a,
                  const std::vector<ItemId>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Frequent itemsets keyed by canonical itemset, each with its support
/// count. Iteration follows the canonical order, so serialization is
/// deterministic.
class FrequentItemsetSet {
 public:
  using Map = std::map<std::vector<ItemId>, std::uint32_t, ItemsetOrder>;
  using const_iterator = Map::const_iterator;

  FrequentItemsetSet() = default;
  explicit FrequentItemsetSet(std::size_t transaction_count)
      : transaction_count_(transaction_count) {}

  /// Inserts or overwrites; `items` must be sorted ascending.
  void add(std::vector<ItemId> items, std::uint32_t support_count) {
    entries_[std::move(items)] = support_count;
  }

  std::optional<std::uint32_t> count_of(std::span<const ItemId> items) const;
  bool contains(std::span<const ItemId> items) const {
    return count_of(items).has_value();
  }

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::size_t transaction_count() const { return transaction_count_; }

  friend bool operator==(const FrequentItemsetSet& a,
                         const FrequentItemsetSet& b) {
    return a.transaction_count_ == b.transaction_count_ &&
           a.entries_ == b.entries_;
  }

 private:
  Map entries_;
  std::size_t transaction_count_ = 0;
};

}  // namespace cochange
