#pragma once

#include <cstdint>
#include <iosfwd>

#include "cochange/transaction.hpp"

namespace cochange {

/// Transaction-size filter bounds: singletons carry no co-change signal and
/// bulk sweeps (over 100 files) are noise.
inline constexpr std::size_t kMinTransactionFiles = 2;
inline constexpr std::size_t kMaxTransactionFiles = 100;

struct SplitCounts {
  std::size_t total = 0;            // before filtering
  std::size_t after_filtering = 0;
  std::size_t train = 0;
  std::size_t test = 0;
};

/// Chronological train/test split. Train strictly precedes test; the
/// evaluation period spans the test transactions.
struct SplitResult {
  TransactionDatabase train;
  TransactionDatabase test;
  std::int64_t period_start = 0;
  std::int64_t period_end = 0;
  SplitCounts counts;
};

/// Keeps exactly the transactions with 2..100 files, order preserved.
TransactionDatabase filter_transactions(const TransactionDatabase& db);

/// Splits an already-filtered database:
///  1. candidate window = the last min(1000, floor(n/2)) transactions;
///  2. the window start expands backward to the month boundary of its
///     earliest timestamp;
///  3. if the expanded window spans more than one year, it shrinks to the
///     transactions within one year of the final timestamp;
///  4. if it still exceeds half the database, the oldest transactions are
///     truncated to the most recent floor(n/2).
/// Everything earlier is train. Throws EmptySplitError when either side
/// would be empty.
SplitResult split_train_test(const TransactionDatabase& filtered);

/// filter + split; counts.total reflects the unfiltered input.
SplitResult prepare_dataset(const TransactionDatabase& raw);

/// Summary CSV: `total,after_filtering,train,test,period_start,period_end`.
void write_split_summary(std::ostream& out, const SplitResult& split);

}  // namespace cochange
