#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "cochange/interner.hpp"
#include "cochange/mining.hpp"
#include "cochange/transaction.hpp"

namespace cochange {

enum class Algorithm { apriori, fp_growth, eclat, relim };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::apriori, Algorithm::fp_growth, Algorithm::eclat,
    Algorithm::relim};

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Exhaustive reference miner: counts every subset of every transaction.
/// Throws OracleLimitError when any transaction has more than 20 items.
FrequentItemsetSet mine_bruteforce(const TransactionDatabase& db,
                                   const MiningParams& params);

/// Level-wise join/prune candidate generation.
FrequentItemsetSet mine_apriori(const TransactionDatabase& db,
                                const MiningParams& params);

/// FP-tree construction plus recursive conditional-pattern-base mining.
FrequentItemsetSet mine_fpgrowth(const TransactionDatabase& db,
                                 const MiningParams& params);

/// Depth-first tidset intersection over the vertical layout.
FrequentItemsetSet mine_eclat(const TransactionDatabase& db,
                              const MiningParams& params);

/// Recursive elimination over suffix lists keyed by least-frequent item.
FrequentItemsetSet mine_relim(const TransactionDatabase& db,
                              const MiningParams& params);

/// Dispatch by algorithm. All four return identical itemset sets.
FrequentItemsetSet mine(Algorithm algorithm, const TransactionDatabase& db,
                        const MiningParams& params);

/// itemsets.csv: `items,support_count,support`; items rendered as paths
/// joined by `|` in lexicographic order, rows in canonical itemset order.
void write_itemsets_csv(std::ostream& out, const FrequentItemsetSet& itemsets,
                        const Interner& interner);

}  // namespace cochange
