#include "cochange/vertical.hpp"

#include <algorithm>

namespace cochange {

VerticalDatabase to_vertical(const TransactionDatabase& db) {
  VerticalDatabase vertical;
  vertical.transaction_count = db.size();
  vertical.tidsets.resize(db.universe());
  const auto& transactions = db.transactions();
  for (Tid tid = 0; tid < transactions.size(); ++tid) {
    for (ItemId item : transactions[tid].items) {
      vertical.tidsets[item].push_back(tid);
    }
  }
  return vertical;
}

std::vector<Tid> tidset_intersect(std::span<const Tid> a,
                                  std::span<const Tid> b) {
  std::vector<Tid> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace cochange
