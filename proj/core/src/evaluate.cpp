#include "cochange/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cochange/csv.hpp"
#include "cochange/errors.hpp"

namespace cochange {

std::vector<TestCase> make_test_cases(const TransactionDatabase& test) {
  std::vector<TestCase> cases;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const auto files = test.files_of(i);
    const std::string& id = test.transactions()[i].id;
    for (std::size_t q = 0; q < files.size(); ++q) {
      TestCase test_case;
      test_case.transaction_id = id;
      test_case.query = files[q];
      test_case.expected.reserve(files.size() - 1);
      for (std::size_t other = 0; other < files.size(); ++other) {
        if (other != q) test_case.expected.push_back(files[other]);
      }
      cases.push_back(std::move(test_case));
    }
  }
  return cases;
}

QueryMetrics score_query(std::span<const std::string> recommended,
                         std::span<const std::string> expected) {
  QueryMetrics metrics;
  metrics.recommended = recommended.size();
  metrics.expected = expected.size();

  std::size_t hits = 0;
  for (const auto& file : recommended) {
    if (std::binary_search(expected.begin(), expected.end(), file)) ++hits;
  }
  metrics.hits = hits;

  if (metrics.recommended > 0) {
    metrics.precision =
        static_cast<double>(hits) / static_cast<double>(metrics.recommended);
  }
  if (metrics.expected > 0) {
    metrics.recall =
        static_cast<double>(hits) / static_cast<double>(metrics.expected);
  }
  const double pr = metrics.precision + metrics.recall;
  metrics.f_measure =
      pr > 0.0 ? 2.0 * metrics.precision * metrics.recall / pr : 0.0;
  return metrics;
}

QueryResult evaluate_query(const RuleIndex& rules, const TestCase& test_case) {
  QueryResult result;
  if (!rules.in_universe(test_case.query)) {
    result.skip_reason = SkipReason::not_in_training;
    return result;
  }
  const Recommendation rec = rules.recommend(test_case.query);
  if (rec.entries.empty()) {
    result.skip_reason = SkipReason::no_recommendations;
    return result;
  }
  std::vector<std::string> recommended;
  recommended.reserve(rec.entries.size());
  for (const auto& entry : rec.entries) recommended.push_back(entry.file);
  std::sort(recommended.begin(), recommended.end());
  result.metrics = score_query(recommended, test_case.expected);
  return result;
}

ProjectEvaluation evaluate_project(const RuleIndex& rules,
                                   const TransactionDatabase& test) {
  ProjectEvaluation evaluation;
  double precision_sum = 0.0, recall_sum = 0.0, f_sum = 0.0;

  for (const TestCase& test_case : make_test_cases(test)) {
    const QueryResult result = evaluate_query(rules, test_case);
    if (!result.metrics) {
      ++evaluation.aggregate.skipped;
      continue;
    }
    ++evaluation.aggregate.evaluated;
    precision_sum += result.metrics->precision;
    recall_sum += result.metrics->recall;
    f_sum += result.metrics->f_measure;
    evaluation.rows.push_back(
        {test_case.transaction_id, test_case.query, *result.metrics});
  }

  if (evaluation.aggregate.evaluated == 0) {
    throw NoEvaluableQueriesError("no evaluable queries (" +
                                  std::to_string(evaluation.aggregate.skipped) +
                                  " skipped)");
  }
  const auto count = static_cast<double>(evaluation.aggregate.evaluated);
  evaluation.aggregate.precision = precision_sum / count;
  evaluation.aggregate.recall = recall_sum / count;
  evaluation.aggregate.f_measure = f_sum / count;
  return evaluation;
}

namespace {

void validate_grid(std::span<const double> grid, const char* name) {
  if (grid.empty()) {
    throw std::invalid_argument(std::string(name) + " grid must be non-empty");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) {
      throw std::invalid_argument(std::string(name) +
                                  " grid must be strictly increasing");
    }
  }
}

}  // namespace

SweepGrid sweep(const TransactionDatabase& train,
                const TransactionDatabase& test, Algorithm algorithm,
                std::span<const double> supports,
                std::span<const double> confidences, unsigned jobs) {
  validate_grid(supports, "support");
  validate_grid(confidences, "confidence");
  if (jobs == 0) jobs = 1;

  SweepGrid grid(supports.size() * confidences.size());

  // One support value per work unit; mining is shared across its
  // confidence cells.
  const auto run_support = [&](std::size_t s) {
    FrequentItemsetSet itemsets;
    std::optional<std::string> mining_failure;
    try {
      itemsets = mine(algorithm, train,
                      MiningParams{supports[s], confidences.front()});
    } catch (const std::exception& e) {
      mining_failure = e.what();
    }
    for (std::size_t c = 0; c < confidences.size(); ++c) {
      SweepCell& cell = grid[s * confidences.size() + c];
      cell.algorithm = algorithm;
      cell.min_support = supports[s];
      cell.min_confidence = confidences[c];
      if (mining_failure) {
        cell.reason = *mining_failure;
        continue;
      }
      try {
        const MiningParams params{supports[s], confidences[c]};
        const auto rules = generate_rules(itemsets, params);
        const RuleIndex index(rules, train.interner());
        cell.metrics = evaluate_project(index, test).aggregate;
      } catch (const Error& e) {
        cell.reason = e.what();
      }
    }
  };

  const unsigned workers =
      std::min<unsigned>(jobs, static_cast<unsigned>(supports.size()));
  if (workers <= 1) {
    for (std::size_t s = 0; s < supports.size(); ++s) run_support(s);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t s = next.fetch_add(1); s < supports.size();
             s = next.fetch_add(1)) {
          run_support(s);
        }
      });
    }
    for (auto& worker : pool) worker.join();
  }
  return grid;
}

TimingResult time_mining(Algorithm algorithm, const TransactionDatabase& train,
                         const MiningParams& params, std::size_t repetitions) {
  if (repetitions == 0) {
    throw std::invalid_argument("repetitions must be at least 1");
  }
  params.validate();

  TimingResult result;
  result.algorithm = algorithm;
  result.transactions = train.size();
  result.params = params;
  result.rep_seconds.reserve(repetitions);

  using clock = std::chrono::steady_clock;
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    const auto begin = clock::now();
    const FrequentItemsetSet itemsets = mine(algorithm, train, params);
    const auto rules = generate_rules(itemsets, params);
    const auto end = clock::now();
    result.itemsets = itemsets.size();
    result.rules = rules.size();
    result.rep_seconds.push_back(
        std::chrono::duration<double>(end - begin).count());
  }
  result.seconds =
      *std::min_element(result.rep_seconds.begin(), result.rep_seconds.end());
  return result;
}

void write_metrics_header(std::ostream& out) {
  out << "algorithm,min_support,min_confidence,precision,recall,f_measure,"
         "evaluated,skipped\n";
}

void write_metrics_row(std::ostream& out, Algorithm algorithm,
                       const MiningParams& params,
                       const AggregateMetrics& metrics) {
  out << csv_line({std::string(to_string(algorithm)),
                   fixed6(params.min_support), fixed6(params.min_confidence),
                   fixed6(metrics.precision), fixed6(metrics.recall),
                   fixed6(metrics.f_measure),
                   std::to_string(metrics.evaluated),
                   std::to_string(metrics.skipped)})
      << '\n';
}

void write_per_query_csv(std::ostream& out,
                         std::span<const PerQueryRow> rows) {
  out << "txn_id,query,P,R,F,a_size,b_size,hit\n";
  for (const PerQueryRow& row : rows) {
    out << csv_line({csv_field(row.transaction_id), csv_field(row.query),
                     fixed6(row.metrics.precision), fixed6(row.metrics.recall),
                     fixed6(row.metrics.f_measure),
                     std::to_string(row.metrics.recommended),
                     std::to_string(row.metrics.expected),
                     std::to_string(row.metrics.hits)})
        << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
  out << "algorithm,min_support,min_confidence,precision,recall,f_measure,"
         "evaluated,skipped,reason\n";
  for (const SweepCell& cell : grid) {
    std::vector<std::string> fields{std::string(to_string(cell.algorithm)),
                                    fixed6(cell.min_support),
                                    fixed6(cell.min_confidence)};
    if (cell.metrics) {
      fields.push_back(fixed6(cell.metrics->precision));
      fields.push_back(fixed6(cell.metrics->recall));
      fields.push_back(fixed6(cell.metrics->f_measure));
      fields.push_back(std::to_string(cell.metrics->evaluated));
      fields.push_back(std::to_string(cell.metrics->skipped));
      fields.push_back("");
    } else {
      fields.insert(fields.end(), {"", "", "", "0", "0"});
      fields.push_back(csv_field(cell.reason));
    }
    out << csv_line(fields) << '\n';
  }
}

void write_timing_header(std::ostream& out) {
  out << "algorithm,seconds,transactions,min_support,min_confidence\n";
}

void write_timing_row(std::ostream& out, const TimingResult& result) {
  out << csv_line({std::string(to_string(result.algorithm)),
                   fixed6(result.seconds),
                   std::to_string(result.transactions),
                   fixed6(result.params.min_support),
                   fixed6(result.params.min_confidence)})
      << '\n';
}

}  // namespace cochange
