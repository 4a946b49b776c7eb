#include <algorithm>

#include "cochange/miners.hpp"
#include "cochange/vertical.hpp"

namespace cochange {

namespace {

struct EclatState {
  const std::vector<std::vector<Tid>>* tidsets;
  const std::vector<ItemId>* frequent_items;  // ascending ids
  std::size_t min_count;
  FrequentItemsetSet* out;
};

// Extends `prefix` (whose tidset is `prefix_tids`) with every frequent item
// after position `from`, pruning branches below the support threshold.
void extend(const EclatState& state, std::vector<ItemId>& prefix,
            const std::vector<Tid>& prefix_tids, std::size_t from) {
  const auto& items = *state.frequent_items;
  for (std::size_t i = from; i < items.size(); ++i) {
    const ItemId item = items[i];
    std::vector<Tid> tids =
        tidset_intersect(prefix_tids, (*state.tidsets)[item]);
    if (tids.size() < state.min_count) continue;
    prefix.push_back(item);
    state.out->add(prefix, static_cast<std::uint32_t>(tids.size()));
    extend(state, prefix, tids, i + 1);
    prefix.pop_back();
  }
}

}  // namespace

FrequentItemsetSet mine_eclat(const TransactionDatabase& db,
                              const MiningParams& params) {
  params.validate();
  const std::size_t min_count = params.min_support_count(db.size());
  FrequentItemsetSet out(db.size());

  const VerticalDatabase vertical = to_vertical(db);
  std::vector<ItemId> frequent;
  for (ItemId item = 0; item < vertical.tidsets.size(); ++item) {
    if (vertical.tidsets[item].size() >= min_count) frequent.push_back(item);
  }

  const EclatState state{&vertical.tidsets, &frequent, min_count, &out};
  std::vector<ItemId> prefix;
  for (std::size_t i = 0; i < frequent.size(); ++i) {
    const ItemId item = frequent[i];
    prefix.push_back(item);
    out.add(prefix,
            static_cast<std::uint32_t>(vertical.tidsets[item].size()));
    extend(state, prefix, vertical.tidsets[item], i + 1);
    prefix.pop_back();
  }
  return out;
}

}  // namespace cochange
