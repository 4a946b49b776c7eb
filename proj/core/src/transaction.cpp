#include "cochange/transaction.hpp"

#include <algorithm>

namespace cochange {

TransactionDatabase TransactionDatabase::build(std::vector<RawTransaction> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const RawTransaction& a, const RawTransaction& b) {
              if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
              return a.id < b.id;
            });

  TransactionDatabase db;
  db.transactions_.reserve(raw.size());
  for (auto& r : raw) {
    std::sort(r.files.begin(), r.files.end());
    r.files.erase(std::unique(r.files.begin(), r.files.end()), r.files.end());

    Transaction txn;
    txn.id = std::move(r.id);
    txn.timestamp = r.timestamp;
    txn.items.reserve(r.files.size());
    for (auto& file : r.files) txn.items.push_back(db.interner_.intern(std::move(file)));
    std::sort(txn.items.begin(), txn.items.end());
    db.transactions_.push_back(std::move(txn));
  }
  return db;
}

std::vector<std::string> TransactionDatabase::files_of(std::size_t index) const {
  std::vector<std::string> files;
  const Transaction& txn = transactions_[index];
  files.reserve(txn.items.size());
  for (ItemId id : txn.items) files.push_back(interner_.resolve(id));
  std::sort(files.begin(), files.end());
  return files;
}

RawTransaction TransactionDatabase::to_raw(std::size_t index) const {
  const Transaction& txn = transactions_[index];
  return RawTransaction{txn.id, txn.timestamp, files_of(index)};
}

bool operator==(const TransactionDatabase& a, const TransactionDatabase& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Transaction& ta = a.transactions_[i];
    const Transaction& tb = b.transactions_[i];
    if (ta.id != tb.id || ta.timestamp != tb.timestamp) return false;
    if (a.files_of(i) != b.files_of(i)) return false;
  }
  return true;
}

}  // namespace cochange
