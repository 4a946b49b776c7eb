#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cochange/interner.hpp"

namespace cochange {

/// The set of files changed together in one commit. `items` is strictly
/// ascending by ItemId with no duplicates.
struct Transaction {
  std::string id;          // commit hash (opaque)
  std::int64_t timestamp;  // UTC seconds, second precision
  std::vector<ItemId> items;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// Pre-interning form of a transaction; files may be unsorted and contain
/// duplicates.
struct RawTransaction {
  std::string id;
  std::int64_t timestamp;
  std::vector<std::string> files;
};

/// Immutable, chronologically ordered transaction database. Ordering is
/// ascending by timestamp with ties broken by commit id (lexicographic);
/// item ids are dense in first-seen order over that ordering, files within
/// a transaction taken in lexicographic order.
class TransactionDatabase {
 public:
  TransactionDatabase() = default;

  static TransactionDatabase build(std::vector<RawTransaction> raw);

  const std::vector<Transaction>& transactions() const { return transactions_; }
  const Interner& interner() const { return interner_; }

  std::size_t size() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }

  /// Count of distinct interned items; every ItemId in any transaction is
  /// below this.
  std::size_t universe() const { return interner_.size(); }

  /// Files of transaction `index`, resolved and sorted lexicographically.
  std::vector<std::string> files_of(std::size_t index) const;

  RawTransaction to_raw(std::size_t index) const;

  /// Content equality: same transactions with the same resolved file sets.
  friend bool operator==(const TransactionDatabase& a,
                         const TransactionDatabase& b);

 private:
  std::vector<Transaction> transactions_;
  Interner interner_;
};

}  // namespace cochange
