#include "cochange/miners.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "cochange/csv.hpp"
#include "cochange/errors.hpp"

namespace cochange {

namespace {

// Tolerates the binary representation of decimal fractions when forming the
// integer threshold (0.1 * 30 evaluates slightly above 3.0).
constexpr double kThresholdSlack = 1e-9;

}  // namespace

std::size_t MiningParams::min_support_count(
    std::size_t transaction_count) const {
  const double scaled =
      min_support * static_cast<double>(transaction_count) - kThresholdSlack;
  const auto count = static_cast<std::size_t>(std::max(0.0, std::ceil(scaled)));
  return std::max<std::size_t>(1, count);
}

void MiningParams::validate() const {
  if (!(min_support > 0.0) || min_support > 1.0) {
    throw std::invalid_argument("min_support must be in (0, 1], got " +
                                std::to_string(min_support));
  }
  if (!(min_confidence > 0.0) || min_confidence > 1.0) {
    throw std::invalid_argument("min_confidence must be in (0, 1], got " +
                                std::to_string(min_confidence));
  }
}

std::optional<std::uint32_t> FrequentItemsetSet::count_of(
    std::span<const ItemId> items) const {
  const auto it = entries_.find(std::vector<ItemId>(items.begin(), items.end()));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::apriori: return "apriori";
    case Algorithm::fp_growth: return "fpgrowth";
    case Algorithm::eclat: return "eclat";
    case Algorithm::relim: return "relim";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "apriori") return Algorithm::apriori;
  if (name == "fpgrowth") return Algorithm::fp_growth;
  if (name == "eclat") return Algorithm::eclat;
  if (name == "relim") return Algorithm::relim;
  return std::nullopt;
}

FrequentItemsetSet mine_bruteforce(const TransactionDatabase& db,
                                   const MiningParams& params) {
  params.validate();
  constexpr std::size_t kMaxTransactionItems = 20;
  for (const auto& txn : db.transactions()) {
    if (txn.items.size() > kMaxTransactionItems) {
      throw OracleLimitError(
          "brute-force miner rejects transactions with more than 20 items "
          "(got " +
          std::to_string(txn.items.size()) + ")");
    }
  }

  const std::size_t min_count = params.min_support_count(db.size());
  std::map<std::vector<ItemId>, std::uint32_t, ItemsetOrder> counts;
  std::vector<ItemId> subset;
  for (const auto& txn : db.transactions()) {
    const auto& items = txn.items;
    const std::size_t n = items.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      subset.clear();
      for (std::size_t bit = 0; bit < n; ++bit) {
        if (mask & (1u << bit)) subset.push_back(items[bit]);
      }
      ++counts[subset];
    }
  }

  FrequentItemsetSet out(db.size());
  for (auto& [items, count] : counts) {
    if (count >= min_count) out.add(items, count);
  }
  return out;
}

namespace {

bool transaction_contains(const std::vector<ItemId>& txn,
                          const std::vector<ItemId>& candidate) {
  return std::includes(txn.begin(), txn.end(), candidate.begin(),
                       candidate.end());
}

// Joins frequent k-itemsets sharing a (k-1)-prefix, then prunes candidates
// with any infrequent k-subset.
std::vector<std::vector<ItemId>> candidates_from(
    const std::vector<std::vector<ItemId>>& level,
    const std::set<std::vector<ItemId>>& level_lookup) {
  std::vector<std::vector<ItemId>> candidates;
  for (std::size_t i = 0; i < level.size(); ++i) {
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      if (!std::equal(level[i].begin(), level[i].end() - 1,
                      level[j].begin())) {
        break;  // level is sorted, so matching prefixes are contiguous
      }
      std::vector<ItemId> candidate = level[i];
      candidate.push_back(level[j].back());

      // The two parents cover the subsets missing one of the last two
      // positions; check the rest.
      bool all_subsets_frequent = true;
      std::vector<ItemId> subset;
      for (std::size_t drop = 0;
           drop + 2 < candidate.size() && all_subsets_frequent; ++drop) {
        subset.clear();
        for (std::size_t p = 0; p < candidate.size(); ++p) {
          if (p != drop) subset.push_back(candidate[p]);
        }
        all_subsets_frequent = level_lookup.count(subset) > 0;
      }
      if (all_subsets_frequent) candidates.push_back(std::move(candidate));
    }
  }
  return candidates;
}

}  // namespace

FrequentItemsetSet mine_apriori(const TransactionDatabase& db,
                                const MiningParams& params) {
  params.validate();
  const std::size_t min_count = params.min_support_count(db.size());
  FrequentItemsetSet out(db.size());

  std::vector<std::uint32_t> item_counts(db.universe(), 0);
  for (const auto& txn : db.transactions()) {
    for (ItemId item : txn.items) ++item_counts[item];
  }

  std::vector<std::vector<ItemId>> level;
  for (ItemId item = 0; item < item_counts.size(); ++item) {
    if (item_counts[item] >= min_count) {
      out.add({item}, item_counts[item]);
      level.push_back({item});
    }
  }

  while (!level.empty()) {
    const std::set<std::vector<ItemId>> lookup(level.begin(), level.end());
    std::vector<std::vector<ItemId>> candidates =
        candidates_from(level, lookup);
    if (candidates.empty()) break;

    std::vector<std::uint32_t> counts(candidates.size(), 0);
    const std::size_t k = candidates.front().size();
    for (const auto& txn : db.transactions()) {
      if (txn.items.size() < k) continue;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (transaction_contains(txn.items, candidates[c])) ++counts[c];
      }
    }

    std::vector<std::vector<ItemId>> next;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (counts[c] >= min_count) {
        out.add(candidates[c], counts[c]);
        next.push_back(std::move(candidates[c]));
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

FrequentItemsetSet mine(Algorithm algorithm, const TransactionDatabase& db,
                        const MiningParams& params) {
  switch (algorithm) {
    case Algorithm::apriori: return mine_apriori(db, params);
    case Algorithm::fp_growth: return mine_fpgrowth(db, params);
    case Algorithm::eclat: return mine_eclat(db, params);
    case Algorithm::relim: return mine_relim(db, params);
  }
  throw std::logic_error("unreachable algorithm dispatch");
}

void write_itemsets_csv(std::ostream& out, const FrequentItemsetSet& itemsets,
                        const Interner& interner) {
  out << "items,support_count,support\n";
  const auto total = static_cast<double>(itemsets.transaction_count());
  std::vector<std::string> paths;
  for (const auto& [items, count] : itemsets) {
    paths.clear();
    for (const ItemId id : items) paths.push_back(interner.resolve(id));
    std::sort(paths.begin(), paths.end());
    std::string joined;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (i > 0) joined.push_back('|');
      joined += paths[i];
    }
    out << csv_line({csv_field(joined), std::to_string(count),
                     fixed6(total > 0 ? count / total : 0.0)})
        << '\n';
  }
}

}  // namespace cochange
