#include "cochange/rules.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "cochange/csv.hpp"
#include "cochange/errors.hpp"

namespace cochange {

namespace {

std::string render_itemset(std::span<const ItemId> items,
                           const Interner& interner) {
  std::vector<std::string> paths;
  paths.reserve(items.size());
  for (ItemId id : items) paths.push_back(interner.resolve(id));
  std::sort(paths.begin(), paths.end());
  std::string out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i > 0) out.push_back('|');
    out += paths[i];
  }
  return out;
}

}  // namespace

std::vector<AssociationRule> generate_rules(const FrequentItemsetSet& itemsets,
                                            const MiningParams& params) {
  params.validate();
  const std::size_t total = itemsets.transaction_count();
  std::vector<AssociationRule> rules;

  std::vector<ItemId> antecedent;
  std::vector<ItemId> consequent;
  for (const auto& [items, joint_count] : itemsets) {
    const std::size_t m = items.size();
    if (m < 2) continue;
    for (std::uint64_t mask = 1; mask + 1 < (1ull << m); ++mask) {
      antecedent.clear();
      consequent.clear();
      for (std::size_t bit = 0; bit < m; ++bit) {
        if (mask & (1ull << bit)) {
          antecedent.push_back(items[bit]);
        } else {
          consequent.push_back(items[bit]);
        }
      }
      const auto antecedent_count = itemsets.count_of(antecedent);
      if (!antecedent_count) {
        throw MissingSubsetError(
            "frequent itemset set lacks the support of a subset "
            "(broken miner output)");
      }
      const double confidence = static_cast<double>(joint_count) /
                                static_cast<double>(*antecedent_count);
      if (confidence < params.min_confidence) continue;
      AssociationRule rule;
      rule.antecedent = antecedent;
      rule.consequent = consequent;
      rule.joint_count = joint_count;
      rule.antecedent_count = *antecedent_count;
      rule.support =
          static_cast<double>(joint_count) / static_cast<double>(total);
      rule.confidence = confidence;
      rules.push_back(std::move(rule));
    }
  }

  std::sort(rules.begin(), rules.end(),
            [](const AssociationRule& a, const AssociationRule& b) {
              if (a.antecedent != b.antecedent) {
                return ItemsetOrder{}(a.antecedent, b.antecedent);
              }
              return ItemsetOrder{}(a.consequent, b.consequent);
            });
  return rules;
}

RuleIndex::RuleIndex(std::span<const AssociationRule> rules,
                     const Interner& universe)
    : universe_(universe) {
  for (const AssociationRule& rule : rules) {
    if (rule.antecedent.size() == 1) {
      by_antecedent_[rule.antecedent.front()].push_back(rule);
    }
  }
}

Recommendation RuleIndex::recommend(std::string_view query,
                                    std::optional<std::size_t> limit) const {
  const auto query_id = universe_.find(query);
  if (!query_id) {
    throw NotInTrainingSetError("file never seen in training history: " +
                                std::string(query));
  }

  Recommendation rec;
  rec.query = std::string(query);

  const auto it = by_antecedent_.find(*query_id);
  if (it != by_antecedent_.end()) {
    // Merge duplicate files across rules, keeping the best confidence and,
    // at equal confidence, the best support. Deterministic under any input
    // rule order: ties pick the lexicographically smallest consequent.
    std::map<ItemId, const AssociationRule*> best;
    for (const AssociationRule& rule : it->second) {
      for (ItemId file : rule.consequent) {
        auto [slot, inserted] = best.try_emplace(file, &rule);
        if (inserted) continue;
        const AssociationRule& incumbent = *slot->second;
        if (rule.confidence > incumbent.confidence ||
            (rule.confidence == incumbent.confidence &&
             (rule.support > incumbent.support ||
              (rule.support == incumbent.support &&
               ItemsetOrder{}(rule.consequent, incumbent.consequent))))) {
          slot->second = &rule;
        }
      }
    }
    rec.entries.reserve(best.size());
    for (const auto& [file, rule] : best) {
      RecommendationEntry entry;
      entry.file = universe_.resolve(file);
      entry.confidence = rule->confidence;
      entry.support = rule->support;
      entry.source = *rule;
      rec.entries.push_back(std::move(entry));
    }
    std::sort(rec.entries.begin(), rec.entries.end(),
              [](const RecommendationEntry& a, const RecommendationEntry& b) {
                if (a.confidence != b.confidence)
                  return a.confidence > b.confidence;
                if (a.support != b.support) return a.support > b.support;
                return a.file < b.file;
              });
  }

  if (limit && rec.entries.size() > *limit) rec.entries.resize(*limit);
  return rec;
}

Recommendation recommend(std::span<const AssociationRule> rules,
                         const Interner& universe, std::string_view query,
                         std::optional<std::size_t> limit) {
  return RuleIndex(rules, universe).recommend(query, limit);
}

void write_rules_csv(std::ostream& out, std::span<const AssociationRule> rules,
                     const Interner& interner) {
  out << "antecedent,consequent,support,confidence\n";
  for (const AssociationRule& rule : rules) {
    out << csv_line({csv_field(render_itemset(rule.antecedent, interner)),
                     csv_field(render_itemset(rule.consequent, interner)),
                     fixed6(rule.support), fixed6(rule.confidence)})
        << '\n';
  }
}

namespace {

std::vector<std::string> split_paths(const std::string& joined) {
  std::vector<std::string> paths;
  std::string current;
  for (char c : joined) {
    if (c == '|') {
      paths.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  paths.push_back(current);
  return paths;
}

}  // namespace

LoadedRules read_rules_csv(std::istream& in) {
  const auto rows = read_csv(in);
  if (rows.empty() ||
      rows.front() !=
          std::vector<std::string>{"antecedent", "consequent", "support",
                                   "confidence"}) {
    throw FormatError("rules.csv: missing or malformed header");
  }

  LoadedRules loaded;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 4) {
      throw FormatError("rules.csv: line " + std::to_string(r + 1) +
                        ": expected 4 fields, got " +
                        std::to_string(row.size()));
    }
    AssociationRule rule;
    for (const auto& path : split_paths(row[0])) {
      if (path.empty()) {
        throw FormatError("rules.csv: line " + std::to_string(r + 1) +
                          ": empty antecedent path");
      }
      rule.antecedent.push_back(loaded.interner.intern(path));
    }
    for (const auto& path : split_paths(row[1])) {
      if (path.empty()) {
        throw FormatError("rules.csv: line " + std::to_string(r + 1) +
                          ": empty consequent path");
      }
      rule.consequent.push_back(loaded.interner.intern(path));
    }
    try {
      rule.support = std::stod(row[2]);
      rule.confidence = std::stod(row[3]);
    } catch (const std::exception&) {
      throw FormatError("rules.csv: line " + std::to_string(r + 1) +
                        ": malformed fraction");
    }
    std::sort(rule.antecedent.begin(), rule.antecedent.end());
    std::sort(rule.consequent.begin(), rule.consequent.end());
    loaded.rules.push_back(std::move(rule));
  }
  return loaded;
}

}  // namespace cochange
