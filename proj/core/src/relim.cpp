#include <algorithm>
#include <cstdint>
#include <vector>

#include "cochange/miners.hpp"

namespace cochange {

namespace {

// A transaction suffix with a multiplicity. Items are stored as ranks into
// the ascending-support item order, ascending within the suffix.
struct Suffix {
  std::uint32_t weight;
  std::vector<std::uint32_t> ranks;
};

// Suffix lists keyed by leading rank (the least frequent remaining item).
using SuffixLists = std::vector<std::vector<Suffix>>;

void push_suffix(SuffixLists& lists, Suffix suffix) {
  if (suffix.ranks.empty()) return;
  const std::uint32_t head = suffix.ranks.front();
  suffix.ranks.erase(suffix.ranks.begin());
  lists[head].push_back(std::move(suffix));
}

// Processes ranks in ascending-support order: emit the prefix extended by
// the current rank when frequent, recurse on its projected lists, then
// redistribute suffixes to later lists (the elimination step).
void eliminate(SuffixLists& lists, std::size_t min_count,
               const std::vector<ItemId>& rank_to_item,
               std::vector<ItemId>& prefix, FrequentItemsetSet& out) {
  for (std::size_t r = 0; r < lists.size(); ++r) {
    std::vector<Suffix> current = std::move(lists[r]);
    lists[r].clear();

    std::uint64_t support = 0;
    for (const Suffix& s : current) support += s.weight;

    if (support >= min_count) {
      prefix.push_back(rank_to_item[r]);
      std::vector<ItemId> itemset = prefix;
      std::sort(itemset.begin(), itemset.end());
      out.add(std::move(itemset), static_cast<std::uint32_t>(support));

      SuffixLists projected(lists.size());
      for (const Suffix& s : current) push_suffix(projected, s);
      eliminate(projected, min_count, rank_to_item, prefix, out);
      prefix.pop_back();
    }

    for (Suffix& s : current) push_suffix(lists, std::move(s));
  }
}

}  // namespace

FrequentItemsetSet mine_relim(const TransactionDatabase& db,
                              const MiningParams& params) {
  params.validate();
  const std::size_t min_count = params.min_support_count(db.size());
  FrequentItemsetSet out(db.size());

  std::vector<std::uint32_t> item_counts(db.universe(), 0);
  for (const auto& txn : db.transactions()) {
    for (ItemId item : txn.items) ++item_counts[item];
  }

  // Ascending support, ties by ascending item id.
  std::vector<ItemId> rank_to_item;
  for (ItemId item = 0; item < item_counts.size(); ++item) {
    if (item_counts[item] >= min_count) rank_to_item.push_back(item);
  }
  std::sort(rank_to_item.begin(), rank_to_item.end(),
            [&](ItemId a, ItemId b) {
              if (item_counts[a] != item_counts[b]) {
                return item_counts[a] < item_counts[b];
              }
              return a < b;
            });
  std::vector<std::uint32_t> item_to_rank(db.universe(), 0);
  std::vector<bool> is_frequent(db.universe(), false);
  for (std::uint32_t r = 0; r < rank_to_item.size(); ++r) {
    item_to_rank[rank_to_item[r]] = r;
    is_frequent[rank_to_item[r]] = true;
  }

  SuffixLists lists(rank_to_item.size());
  for (const auto& txn : db.transactions()) {
    Suffix suffix;
    suffix.weight = 1;
    for (ItemId item : txn.items) {
      if (is_frequent[item]) suffix.ranks.push_back(item_to_rank[item]);
    }
    std::sort(suffix.ranks.begin(), suffix.ranks.end());
    push_suffix(lists, std::move(suffix));
  }

  std::vector<ItemId> prefix;
  eliminate(lists, min_count, rank_to_item, prefix, out);
  return out;
}

}  // namespace cochange
