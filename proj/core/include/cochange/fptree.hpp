#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "cochange/mining.hpp"
#include "cochange/transaction.hpp"

namespace cochange {

/// An itemset projection with a multiplicity (conditional pattern bases carry
/// path counts).
using WeightedItems = std::pair<std::vector<ItemId>, std::uint32_t>;

struct FPNode {
  ItemId item = 0;  // meaningless on the root
  std::uint32_t count = 0;
  FPNode* parent = nullptr;
  FPNode* next_same_item = nullptr;  // header-table chain
  std::vector<std::unique_ptr<FPNode>> children;

  FPNode* find_child(ItemId target) const {
    for (const auto& child : children) {
      if (child->item == target) return child.get();
    }
    return nullptr;
  }
};

/// Prefix tree over transactions projected onto frequent items. The header
/// table is ordered by descending support, ties by ascending item id; each
/// entry chains every node carrying its item.
class FPTree {
 public:
  struct HeaderEntry {
    ItemId item;
    std::uint32_t support;  // total count across the chain
    FPNode* head;
  };

  FPTree(const std::vector<WeightedItems>& rows, std::size_t min_count);

  static FPTree from_database(const TransactionDatabase& db,
                              std::size_t min_count);

  bool empty() const { return header_.empty(); }
  const FPNode& root() const { return *root_; }
  const std::vector<HeaderEntry>& header() const { return header_; }

  /// Prefix paths (root-to-parent item lists, in header order) for every
  /// node in the entry's chain, weighted by the node count.
  std::vector<WeightedItems> conditional_base(const HeaderEntry& entry) const;

 private:
  std::unique_ptr<FPNode> root_;
  std::vector<HeaderEntry> header_;
};

}  // namespace cochange
