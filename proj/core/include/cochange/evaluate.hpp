#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cochange/miners.hpp"
#include "cochange/rules.hpp"
#include "cochange/transaction.hpp"

namespace cochange {

/// One query drawn from a test transaction: the query file plus the
/// transaction's other files as the expected outcome.
struct TestCase {
  std::string transaction_id;
  std::string query;
  std::vector<std::string> expected;  // sorted, never contains the query
};

/// Every file of every test transaction serves as a query once.
std::vector<TestCase> make_test_cases(const TransactionDatabase& test);

struct QueryMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;  // 0 when precision + recall == 0
  std::size_t recommended = 0;  // |A|
  std::size_t expected = 0;     // |B|
  std::size_t hits = 0;         // |A ∩ B|
};

enum class SkipReason { none, not_in_training, no_recommendations };

/// Metrics, or the reason the query was excluded from the means.
struct QueryResult {
  std::optional<QueryMetrics> metrics;
  SkipReason skip_reason = SkipReason::none;
};

/// Pure metric arithmetic given a ranked recommendation list and the
/// expected file set (both sorted).
QueryMetrics score_query(std::span<const std::string> recommended,
                         std::span<const std::string> expected);

QueryResult evaluate_query(const RuleIndex& rules, const TestCase& test_case);

struct AggregateMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
};

struct PerQueryRow {
  std::string transaction_id;
  std::string query;
  QueryMetrics metrics;
};

struct ProjectEvaluation {
  AggregateMetrics aggregate;
  std::vector<PerQueryRow> rows;  // evaluated queries only
};

/// Means over the evaluated (non-skipped) queries. Throws
/// NoEvaluableQueriesError when every query is skipped.
ProjectEvaluation evaluate_project(const RuleIndex& rules,
                                   const TransactionDatabase& test);

struct SweepCell {
  Algorithm algorithm;
  double min_support = 0.0;
  double min_confidence = 0.0;
  std::optional<AggregateMetrics> metrics;
  std::string reason;  // set when metrics is empty
};

using SweepGrid = std::vector<SweepCell>;

/// Evaluates the cartesian grid in support-major order. Grids must be
/// non-empty and strictly increasing. Mining happens once per support;
/// cells for distinct supports may run concurrently (`jobs`). A cell whose
/// evaluation fails becomes a null-metrics row carrying the reason.
SweepGrid sweep(const TransactionDatabase& train,
                const TransactionDatabase& test, Algorithm algorithm,
                std::span<const double> supports,
                std::span<const double> confidences, unsigned jobs = 1);

struct TimingResult {
  Algorithm algorithm;
  double seconds = 0.0;  // minimum over repetitions
  std::vector<double> rep_seconds;
  std::size_t transactions = 0;
  MiningParams params;
  std::size_t itemsets = 0;
  std::size_t rules = 0;
};

/// Times mining plus rule generation (no I/O) over `repetitions` runs,
/// reporting the minimum to suppress scheduler noise.
TimingResult time_mining(Algorithm algorithm, const TransactionDatabase& train,
                         const MiningParams& params, std::size_t repetitions);

/// metrics.csv row block:
/// `algorithm,min_support,min_confidence,precision,recall,f_measure,evaluated,skipped`
void write_metrics_header(std::ostream& out);
void write_metrics_row(std::ostream& out, Algorithm algorithm,
                       const MiningParams& params,
                       const AggregateMetrics& metrics);

/// per-query CSV: `txn_id,query,P,R,F,a_size,b_size,hit`
void write_per_query_csv(std::ostream& out,
                         std::span<const PerQueryRow> rows);

/// sweep CSV: the metrics columns plus a trailing `reason` column (empty on
/// evaluated cells).
void write_sweep_csv(std::ostream& out, const SweepGrid& grid);

/// timing.csv: `algorithm,seconds,transactions,min_support,min_confidence`
void write_timing_header(std::ostream& out);
void write_timing_row(std::ostream& out, const TimingResult& result);

}  // namespace cochange
