#include "cochange/dataset.hpp"

#include <algorithm>
#include <ostream>

#include "cochange/csv.hpp"
#include "cochange/errors.hpp"
#include "cochange/time_utils.hpp"

namespace cochange {

namespace {

TransactionDatabase rebuild_range(const TransactionDatabase& db,
                                  std::size_t begin, std::size_t end) {
  std::vector<RawTransaction> raw;
  raw.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) raw.push_back(db.to_raw(i));
  return TransactionDatabase::build(std::move(raw));
}

}  // namespace

TransactionDatabase filter_transactions(const TransactionDatabase& db) {
  std::vector<RawTransaction> raw;
  for (std::size_t i = 0; i < db.size(); ++i) {
    const std::size_t size = db.transactions()[i].items.size();
    if (size >= kMinTransactionFiles && size <= kMaxTransactionFiles) {
      raw.push_back(db.to_raw(i));
    }
  }
  return TransactionDatabase::build(std::move(raw));
}

SplitResult split_train_test(const TransactionDatabase& filtered) {
  const std::size_t n = filtered.size();
  if (n < 2) {
    throw EmptySplitError("cannot split a database of " + std::to_string(n) +
                          " transaction(s)");
  }
  const auto& txns = filtered.transactions();
  const std::size_t half = n / 2;

  const std::size_t candidate = std::min<std::size_t>(1000, half);
  std::size_t start = n - candidate;

  // Round the window start down to the month of its earliest transaction.
  const std::int64_t month_start = month_floor(txns[start].timestamp);
  while (start > 0 && txns[start - 1].timestamp >= month_start) --start;

  // Cap the expanded window at one year before the end of history.
  const std::int64_t year_floor = one_year_before(txns[n - 1].timestamp);
  if (txns[start].timestamp < year_floor) {
    while (start < n && txns[start].timestamp < year_floor) ++start;
  }

  // Cap at half the database, dropping the oldest window transactions.
  if (n - start > half) start = n - half;

  if (start == 0 || start == n) {
    throw EmptySplitError("split would leave an empty train or test set");
  }

  SplitResult result;
  result.train = rebuild_range(filtered, 0, start);
  result.test = rebuild_range(filtered, start, n);
  result.period_start = txns[start].timestamp;
  result.period_end = txns[n - 1].timestamp;
  result.counts.total = n;
  result.counts.after_filtering = n;
  result.counts.train = result.train.size();
  result.counts.test = result.test.size();
  return result;
}

SplitResult prepare_dataset(const TransactionDatabase& raw) {
  const TransactionDatabase filtered = filter_transactions(raw);
  SplitResult result = split_train_test(filtered);
  result.counts.total = raw.size();
  return result;
}

void write_split_summary(std::ostream& out, const SplitResult& split) {
  out << "total,after_filtering,train,test,period_start,period_end\n";
  out << csv_line({std::to_string(split.counts.total),
                   std::to_string(split.counts.after_filtering),
                   std::to_string(split.counts.train),
                   std::to_string(split.counts.test),
                   csv_field(format_timestamp(split.period_start)),
                   csv_field(format_timestamp(split.period_end))})
      << '\n';
}

}  // namespace cochange
