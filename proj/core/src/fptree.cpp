#include "cochange/fptree.hpp"

#include <algorithm>
#include <unordered_map>

#include "cochange/miners.hpp"

namespace cochange {

FPTree::FPTree(const std::vector<WeightedItems>& rows, std::size_t min_count)
    : root_(std::make_unique<FPNode>()) {
  std::unordered_map<ItemId, std::uint32_t> supports;
  for (const auto& [items, weight] : rows) {
    for (ItemId item : items) supports[item] += weight;
  }

  std::vector<std::pair<ItemId, std::uint32_t>> frequent;
  for (const auto& [item, support] : supports) {
    if (support >= min_count) frequent.emplace_back(item, support);
  }
  std::sort(frequent.begin(), frequent.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });

  std::unordered_map<ItemId, std::size_t> rank;
  header_.reserve(frequent.size());
  for (std::size_t i = 0; i < frequent.size(); ++i) {
    rank.emplace(frequent[i].first, i);
    header_.push_back({frequent[i].first, frequent[i].second, nullptr});
  }
  if (header_.empty()) return;

  std::vector<FPNode*> tails(header_.size(), nullptr);
  std::vector<ItemId> projected;
  for (const auto& [items, weight] : rows) {
    projected.clear();
    for (ItemId item : items) {
      if (rank.count(item)) projected.push_back(item);
    }
    std::sort(projected.begin(), projected.end(),
              [&](ItemId a, ItemId b) { return rank.at(a) < rank.at(b); });

    FPNode* node = root_.get();
    for (ItemId item : projected) {
      FPNode* child = node->find_child(item);
      if (child == nullptr) {
        auto owned = std::make_unique<FPNode>();
        child = owned.get();
        child->item = item;
        child->parent = node;
        node->children.push_back(std::move(owned));

        const std::size_t r = rank.at(item);
        if (tails[r] == nullptr) {
          header_[r].head = child;
        } else {
          tails[r]->next_same_item = child;
        }
        tails[r] = child;
      }
      child->count += weight;
      node = child;
    }
  }
}

FPTree FPTree::from_database(const TransactionDatabase& db,
                             std::size_t min_count) {
  std::vector<WeightedItems> rows;
  rows.reserve(db.size());
  for (const auto& txn : db.transactions()) rows.emplace_back(txn.items, 1u);
  return FPTree(rows, min_count);
}

std::vector<WeightedItems> FPTree::conditional_base(
    const HeaderEntry& entry) const {
  std::vector<WeightedItems> base;
  for (const FPNode* node = entry.head; node != nullptr;
       node = node->next_same_item) {
    std::vector<ItemId> path;
    for (const FPNode* up = node->parent; up != nullptr && up->parent != nullptr;
         up = up->parent) {
      path.push_back(up->item);
    }
    if (!path.empty()) {
      std::reverse(path.begin(), path.end());
      base.emplace_back(std::move(path), node->count);
    }
  }
  return base;
}

namespace {

void mine_tree(const FPTree& tree, std::size_t min_count,
               const std::vector<ItemId>& suffix, FrequentItemsetSet& out) {
  const auto& header = tree.header();
  // Ascending support order: walk the header from the tail.
  for (auto it = header.rbegin(); it != header.rend(); ++it) {
    std::vector<ItemId> itemset = suffix;
    itemset.push_back(it->item);
    std::sort(itemset.begin(), itemset.end());
    out.add(itemset, it->support);

    const auto base = tree.conditional_base(*it);
    if (base.empty()) continue;
    FPTree conditional(base, min_count);
    if (conditional.empty()) continue;
    std::vector<ItemId> next_suffix = suffix;
    next_suffix.push_back(it->item);
    mine_tree(conditional, min_count, next_suffix, out);
  }
}

}  // namespace

FrequentItemsetSet mine_fpgrowth(const TransactionDatabase& db,
                                 const MiningParams& params) {
  params.validate();
  const std::size_t min_count = params.min_support_count(db.size());
  FrequentItemsetSet out(db.size());
  const FPTree tree = FPTree::from_database(db, min_count);
  if (!tree.empty()) mine_tree(tree, min_count, {}, out);
  return out;
}

}  // namespace cochange
