#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cochange/interner.hpp"
#include "cochange/mining.hpp"

namespace cochange {

/// antecedent => consequent, both sorted, non-empty and disjoint.
/// support = support_count(A ∪ C) / |D|; confidence = count(A ∪ C) / count(A).
struct AssociationRule {
  std::vector<ItemId> antecedent;
  std::vector<ItemId> consequent;
  std::uint32_t joint_count = 0;
  std::uint32_t antecedent_count = 0;
  double support = 0.0;
  double confidence = 0.0;

  friend bool operator==(const AssociationRule&,
                         const AssociationRule&) = default;
};

/// Emits every bipartition A ⊎ C of every frequent itemset of size >= 2
/// whose confidence meets `min_confidence`. The input set must contain all
/// frequent itemsets down to size 1; a missing antecedent support raises
/// MissingSubsetError. Output is ordered by (antecedent, consequent).
std::vector<AssociationRule> generate_rules(const FrequentItemsetSet& itemsets,
                                            const MiningParams& params);

struct RecommendationEntry {
  std::string file;
  double confidence = 0.0;  // best over contributing rules
  double support = 0.0;     // best support at that confidence
  AssociationRule source;   // the rule that supplied the winning scores
};

/// Ranked co-change suggestions for one query file. The query never appears
/// in its own list; ranking is descending confidence, then descending
/// support, then lexicographic path.
struct Recommendation {
  std::string query;
  std::vector<RecommendationEntry> entries;
};

/// Singleton-antecedent rule index for repeated queries over a fixed rule
/// list. Rules and the training path universe are copied in.
class RuleIndex {
 public:
  RuleIndex(std::span<const AssociationRule> rules, const Interner& universe);

  /// Throws NotInTrainingSetError when the query was never seen in training.
  /// A query with no matching rule yields an empty recommendation.
  Recommendation recommend(std::string_view query,
                           std::optional<std::size_t> limit = {}) const;

  bool in_universe(std::string_view path) const {
    return universe_.find(path).has_value();
  }
  const Interner& universe() const { return universe_; }

 private:
  std::unordered_map<ItemId, std::vector<AssociationRule>> by_antecedent_;
  Interner universe_;
};

/// One-shot convenience over RuleIndex.
Recommendation recommend(std::span<const AssociationRule> rules,
                         const Interner& universe, std::string_view query,
                         std::optional<std::size_t> limit = {});

/// rules.csv: header `antecedent,consequent,support,confidence`; itemsets
/// rendered as file paths joined by `|` in lexicographic order; fractions
/// with exactly 6 digits.
void write_rules_csv(std::ostream& out, std::span<const AssociationRule> rules,
                     const Interner& interner);

/// Rules re-read from rules.csv carry fractions only; support counts are
/// unknown (left 0) and the interner is rebuilt from the mentioned paths.
struct LoadedRules {
  std::vector<AssociationRule> rules;
  Interner interner;
};
LoadedRules read_rules_csv(std::istream& in);

}  // namespace cochange
