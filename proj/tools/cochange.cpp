#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cochange/csv.hpp"
#include "cochange/dataset.hpp"
#include "cochange/errors.hpp"
#include "cochange/evaluate.hpp"
#include "cochange/history.hpp"
#include "cochange/log.hpp"
#include "cochange/miners.hpp"
#include "cochange/rules.hpp"
#include "cochange/stats.hpp"
#include "cochange/synth.hpp"
#include "cochange/time_utils.hpp"
#include "cochange/transactions_io.hpp"

namespace fs = std::filesystem;
using namespace cochange;

namespace {

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open for writing: " + path.string());
  return out;
}

void finish_output(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
}

/// Accepts a full `YYYY-MM-DDThh:mm:ssZ` instant or a bare `YYYY-MM-DD`
/// date (start of day for --since, end of day for --until).
std::int64_t parse_time_flag(const std::string& text, bool end_of_day) {
  if (const auto instant = parse_timestamp(text)) return *instant;
  if (text.size() == 10) {
    const auto padded =
        text + (end_of_day ? "T23:59:59Z" : "T00:00:00Z");
    if (const auto instant = parse_timestamp(padded)) return *instant;
  }
  throw Error("unrecognized date: " + text +
              " (expected YYYY-MM-DD or YYYY-MM-DDThh:mm:ssZ)");
}

std::vector<Algorithm> select_algorithms(const std::string& selector) {
  if (selector == "all") {
    return {kAllAlgorithms, kAllAlgorithms + 4};
  }
  const auto algorithm = parse_algorithm(selector);
  if (!algorithm) {
    throw Error("unknown algorithm: " + selector +
                " (expected apriori, fpgrowth, eclat, relim or all)");
  }
  return {*algorithm};
}

std::vector<double> parse_grid(const std::string& list, const char* name) {
  std::vector<double> values;
  std::string token;
  std::istringstream stream(list);
  while (std::getline(stream, token, ',')) {
    try {
      values.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw Error(std::string("malformed ") + name + " grid value: " + token);
    }
  }
  if (values.empty()) throw Error(std::string(name) + " grid is empty");
  return values;
}

/// Mines with the selector; `all` runs every algorithm and insists the
/// outputs agree before returning the shared result.
FrequentItemsetSet mine_selected(const std::string& selector,
                                 const TransactionDatabase& db,
                                 const MiningParams& params) {
  const auto algorithms = select_algorithms(selector);
  FrequentItemsetSet result = mine(algorithms.front(), db, params);
  for (std::size_t i = 1; i < algorithms.size(); ++i) {
    if (!(mine(algorithms[i], db, params) == result)) {
      throw std::logic_error(
          "mining algorithms disagree; this is a bug in the miners");
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Subcommand options and implementations. `pipeline` reuses these directly so
// composing the individual commands by hand produces identical files.

struct ExtractOptions {
  std::string repo;
  std::string extension = ".java";
  std::string since, until;
  std::string out;
  std::string records;
};

TransactionDatabase run_extract(const ExtractOptions& options) {
  ExtractionConfig config;
  config.repo = options.repo;
  config.extension = options.extension;
  if (!options.since.empty()) {
    config.since = parse_time_flag(options.since, false);
  }
  if (!options.until.empty()) {
    config.until = parse_time_flag(options.until, true);
  }

  const auto result = extract_history(config);
  log_info("extracted " + std::to_string(result.records.size()) +
           " change records from " + options.repo);

  if (!options.records.empty()) {
    auto out = open_output(options.records);
    write_records_csv(out, result.records);
    finish_output(out, options.records);
  }

  auto db = to_transactions(result.records);
  auto out = open_output(options.out);
  write_transactions(out, db);
  finish_output(out, options.out);
  log_info("wrote " + std::to_string(db.size()) + " transactions to " +
           options.out);
  return db;
}

struct PrepareOptions {
  std::string in;
  std::string train;
  std::string test;
  std::string summary;
};

SplitResult run_prepare(const PrepareOptions& options,
                        const TransactionDatabase* preloaded = nullptr) {
  const TransactionDatabase db =
      preloaded != nullptr ? *preloaded : read_transactions(fs::path(options.in));
  auto split = prepare_dataset(db);

  auto train_out = open_output(options.train);
  write_transactions(train_out, split.train);
  finish_output(train_out, options.train);

  auto test_out = open_output(options.test);
  write_transactions(test_out, split.test);
  finish_output(test_out, options.test);

  if (!options.summary.empty()) {
    auto summary_out = open_output(options.summary);
    write_split_summary(summary_out, split);
    finish_output(summary_out, options.summary);
  }
  log_info("split " + std::to_string(split.counts.after_filtering) +
           " filtered transactions into " + std::to_string(split.counts.train) +
           " train / " + std::to_string(split.counts.test) + " test");
  return split;
}

struct MineOptions {
  std::string in;
  std::string algorithm = "apriori";
  double support = 0.2;
  std::string out;
};

void run_mine(const MineOptions& options) {
  const auto db = read_transactions(fs::path(options.in));
  const MiningParams params{options.support, 0.1};
  params.validate();
  const auto itemsets = mine_selected(options.algorithm, db, params);
  auto out = open_output(options.out);
  write_itemsets_csv(out, itemsets, db.interner());
  finish_output(out, options.out);
  log_info("mined " + std::to_string(itemsets.size()) + " frequent itemsets");
}

struct RulesOptions {
  std::string in;
  std::string algorithm = "apriori";
  double support = 0.2;
  double confidence = 0.1;
  std::string out;
};

void run_rules(const RulesOptions& options,
               const TransactionDatabase* preloaded = nullptr) {
  const TransactionDatabase db =
      preloaded != nullptr ? *preloaded : read_transactions(fs::path(options.in));
  const MiningParams params{options.support, options.confidence};
  params.validate();
  const auto itemsets = mine_selected(options.algorithm, db, params);
  const auto rules = generate_rules(itemsets, params);
  auto out = open_output(options.out);
  write_rules_csv(out, rules, db.interner());
  finish_output(out, options.out);
  log_info("wrote " + std::to_string(rules.size()) + " rules to " +
           options.out);
}

struct RecommendOptions {
  std::string rules;
  std::string file;
  std::size_t limit = 0;  // 0 = unlimited
  std::string train;
};

void run_recommend(const RecommendOptions& options) {
  std::ifstream in(options.rules, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + options.rules);
  const auto loaded = read_rules_csv(in);

  if (!options.train.empty()) {
    const auto train = read_transactions(fs::path(options.train));
    if (!train.interner().find(options.file)) {
      throw NotInTrainingSetError("file never seen in training history: " +
                                  options.file);
    }
    if (!loaded.interner.find(options.file)) {
      return;  // trained but ruleless: a valid empty recommendation
    }
  }

  const RuleIndex index(loaded.rules, loaded.interner);
  const std::optional<std::size_t> limit =
      options.limit > 0 ? std::optional<std::size_t>(options.limit)
                        : std::nullopt;
  const auto recommendation = index.recommend(options.file, limit);
  for (const auto& entry : recommendation.entries) {
    std::cout << entry.file << '\n';
  }
}

struct EvaluateOptions {
  std::string train;
  std::string test;
  std::string algorithm = "all";
  double support = 0.2;
  double confidence = 0.1;
  std::string out;
  std::string per_query;
};

fs::path per_query_path(const fs::path& base, Algorithm algorithm,
                        bool multiple) {
  if (!multiple) return base;
  fs::path named = base;
  named.replace_filename(base.stem().string() + "_" +
                         std::string(to_string(algorithm)) +
                         base.extension().string());
  return named;
}

void run_evaluate(const EvaluateOptions& options,
                  const TransactionDatabase* train_db = nullptr,
                  const TransactionDatabase* test_db = nullptr) {
  const TransactionDatabase train =
      train_db != nullptr ? *train_db
                          : read_transactions(fs::path(options.train));
  const TransactionDatabase test =
      test_db != nullptr ? *test_db : read_transactions(fs::path(options.test));
  const MiningParams params{options.support, options.confidence};
  params.validate();

  const auto algorithms = select_algorithms(options.algorithm);
  auto out = open_output(options.out);
  write_metrics_header(out);
  for (const Algorithm algorithm : algorithms) {
    const auto itemsets = mine(algorithm, train, params);
    const auto rules = generate_rules(itemsets, params);
    const RuleIndex index(rules, train.interner());
    const auto evaluation = evaluate_project(index, test);
    write_metrics_row(out, algorithm, params, evaluation.aggregate);

    if (!options.per_query.empty()) {
      const auto path = per_query_path(options.per_query, algorithm,
                                       algorithms.size() > 1);
      auto pq = open_output(path);
      write_per_query_csv(pq, evaluation.rows);
      finish_output(pq, path);
    }
  }
  finish_output(out, options.out);
  log_info("wrote metrics to " + options.out);
}

struct SweepOptions {
  std::string train;
  std::string test;
  std::string algorithm = "all";
  std::string supports = "0.05,0.1,0.2,0.4";
  std::string confidences = "0.1,0.3,0.5,0.7,0.9";
  unsigned jobs = 1;
  std::string out;
};

void run_sweep(const SweepOptions& options) {
  const auto train = read_transactions(fs::path(options.train));
  const auto test = read_transactions(fs::path(options.test));
  const auto supports = parse_grid(options.supports, "support");
  const auto confidences = parse_grid(options.confidences, "confidence");

  SweepGrid all;
  for (const Algorithm algorithm : select_algorithms(options.algorithm)) {
    auto grid =
        sweep(train, test, algorithm, supports, confidences, options.jobs);
    all.insert(all.end(), grid.begin(), grid.end());
  }
  auto out = open_output(options.out);
  write_sweep_csv(out, all);
  finish_output(out, options.out);
  log_info("wrote " + std::to_string(all.size()) + " sweep rows to " +
           options.out);
}

struct BenchOptions {
  std::string in;
  std::string algorithm = "all";
  double support = 0.2;
  double confidence = 0.1;
  std::size_t repetitions = 3;
  std::string out;
};

void run_bench(const BenchOptions& options) {
  const auto db = read_transactions(fs::path(options.in));
  const MiningParams params{options.support, options.confidence};
  params.validate();

  // Timing runs are strictly serial.
  auto out = open_output(options.out);
  write_timing_header(out);
  for (const Algorithm algorithm : select_algorithms(options.algorithm)) {
    const auto result =
        time_mining(algorithm, db, params, options.repetitions);
    write_timing_row(out, result);
    log_info(std::string(to_string(algorithm)) + ": " +
             fixed6(result.seconds) + "s (" + std::to_string(result.rules) +
             " rules)");
  }
  finish_output(out, options.out);
}

struct CompareOptions {
  std::string in;
  std::string out;
  std::string markdown;
};

void run_compare(const CompareOptions& options) {
  std::ifstream in(options.in, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + options.in);
  const auto rows = read_csv(in);
  if (rows.empty()) throw FormatError(options.in + ": empty metrics file");

  const auto& header = rows.front();
  const auto column = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw FormatError(options.in + ": missing column " + name);
  };
  const std::size_t algo_col = column("algorithm");
  const std::size_t support_col = column("min_support");
  const std::size_t confidence_col = column("min_confidence");
  const std::size_t precision_col = column("precision");
  const std::size_t recall_col = column("recall");
  const std::size_t f_col = column("f_measure");

  // Config key -> algorithm -> (P, R, F); only fully evaluated rows count.
  struct Cell {
    double precision, recall, f_measure;
  };
  std::map<std::pair<double, double>, std::map<std::string, Cell>> table;
  std::vector<std::string> algorithms;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() < header.size()) {
      throw FormatError(options.in + ": line " + std::to_string(r + 1) +
                        ": expected " + std::to_string(header.size()) +
                        " fields");
    }
    if (row[precision_col].empty()) continue;  // null-metrics sweep row
    Cell cell{};
    std::pair<double, double> key;
    try {
      key = {std::stod(row[support_col]), std::stod(row[confidence_col])};
      cell = {std::stod(row[precision_col]), std::stod(row[recall_col]),
              std::stod(row[f_col])};
    } catch (const std::exception&) {
      throw FormatError(options.in + ": line " + std::to_string(r + 1) +
                        ": malformed numeric field");
    }
    const std::string& algorithm = row[algo_col];
    if (std::find(algorithms.begin(), algorithms.end(), algorithm) ==
        algorithms.end()) {
      algorithms.push_back(algorithm);
    }
    table[key][algorithm] = cell;
  }
  if (algorithms.size() < 2) {
    throw Error(options.in +
                ": need evaluated rows for at least two algorithms");
  }

  std::vector<AlgorithmMetricSeries> series(algorithms.size());
  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    series[i].algorithm = algorithms[i];
  }
  std::size_t aligned = 0;
  for (const auto& [key, cells] : table) {
    if (cells.size() != algorithms.size()) continue;  // not present for all
    ++aligned;
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
      const Cell& cell = cells.at(algorithms[i]);
      series[i].precision.push_back(cell.precision);
      series[i].recall.push_back(cell.recall);
      series[i].f_measure.push_back(cell.f_measure);
    }
  }
  if (aligned == 0) {
    throw Error(options.in + ": no configuration was evaluated by every "
                             "algorithm");
  }
  log_info("comparing " + std::to_string(algorithms.size()) +
           " algorithms over " + std::to_string(aligned) + " configurations");

  const auto report = compare_algorithms(series);
  auto out = open_output(options.out);
  write_comparison_csv(out, report);
  finish_output(out, options.out);

  if (!options.markdown.empty()) {
    auto md = open_output(options.markdown);
    md << comparison_markdown(report);
    finish_output(md, options.markdown);
  }
}

struct PipelineOptions {
  std::string repo;
  std::string extension = ".java";
  std::string algorithm = "all";
  double support = 0.2;
  double confidence = 0.1;
  std::string outdir = ".";
};

void run_pipeline(const PipelineOptions& options) {
  const fs::path dir(options.outdir);
  fs::create_directories(dir);

  ExtractOptions extract;
  extract.repo = options.repo;
  extract.extension = options.extension;
  extract.out = (dir / "transactions.jsonl").string();
  extract.records = (dir / "records.csv").string();
  const auto db = run_extract(extract);

  PrepareOptions prepare;
  prepare.in = extract.out;
  prepare.train = (dir / "train.jsonl").string();
  prepare.test = (dir / "test.jsonl").string();
  prepare.summary = (dir / "split.csv").string();
  const auto split = run_prepare(prepare, &db);

  RulesOptions rules;
  rules.in = prepare.train;
  // All four algorithms yield identical rule sets, so one rules.csv is
  // written, mined by the first selected algorithm.
  rules.algorithm =
      std::string(to_string(select_algorithms(options.algorithm).front()));
  rules.support = options.support;
  rules.confidence = options.confidence;
  rules.out = (dir / "rules.csv").string();
  run_rules(rules, &split.train);

  EvaluateOptions evaluate;
  evaluate.train = prepare.train;
  evaluate.test = prepare.test;
  evaluate.algorithm = options.algorithm;
  evaluate.support = options.support;
  evaluate.confidence = options.confidence;
  evaluate.out = (dir / "metrics.csv").string();
  evaluate.per_query = (dir / "per_query.csv").string();
  run_evaluate(evaluate, &split.train, &split.test);
}

struct SynthOptions {
  std::uint64_t seed = 0;
  std::uint32_t items = 100;
  std::uint32_t transactions = 1000;
  double density = 0.05;
  std::uint32_t groups = 0;
  double group_probability = 0.25;
  std::string start = "2020-01-01T00:00:00Z";
  std::uint32_t span_days = 730;
  std::string out;
};

void run_synth(const SynthOptions& options) {
  SynthConfig config;
  config.seed = options.seed;
  config.items = options.items;
  config.transactions = options.transactions;
  config.density = options.density;
  config.pattern_groups = options.groups;
  config.group_probability = options.group_probability;
  config.start_timestamp = parse_time_flag(options.start, false);
  config.span_seconds = static_cast<std::int64_t>(options.span_days) * 86400;

  const auto db = make_synthetic_db(config);
  auto out = open_output(options.out);
  write_transactions(out, db);
  finish_output(out, options.out);
  log_info("wrote " + std::to_string(db.size()) +
           " synthetic transactions to " + options.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-change mining toolkit: mines a Git repository's change "
               "history to recommend files that change together, and "
               "benchmarks four frequent-pattern-mining algorithms."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("cochange ") + COCHANGE_VERSION);

  ExtractOptions extract;
  auto* extract_cmd = app.add_subcommand(
      "extract", "Extract file-change transactions from a Git repository");
  extract_cmd->add_option("--repo", extract.repo, "Path to the repository")
      ->required();
  extract_cmd->add_option("--ext", extract.extension,
                          "File extension filter (case-insensitive)");
  extract_cmd->add_option("--since", extract.since,
                          "Keep commits at or after this date");
  extract_cmd->add_option("--until", extract.until,
                          "Keep commits at or before this date");
  extract_cmd->add_option("--out", extract.out, "Output transactions.jsonl")
      ->required();
  extract_cmd->add_option("--records", extract.records,
                          "Also write per-file change records CSV");

  PrepareOptions prepare;
  auto* prepare_cmd = app.add_subcommand(
      "prepare", "Filter transactions and split them into train/test");
  prepare_cmd->add_option("--in", prepare.in, "Input transactions.jsonl")
      ->required();
  prepare_cmd->add_option("--train", prepare.train, "Output train.jsonl")
      ->required();
  prepare_cmd->add_option("--test", prepare.test, "Output test.jsonl")
      ->required();
  prepare_cmd->add_option("--summary", prepare.summary,
                          "Output split-summary CSV");

  MineOptions mine_options;
  auto* mine_cmd =
      app.add_subcommand("mine", "Mine frequent itemsets from transactions");
  mine_cmd->add_option("--in", mine_options.in, "Input transactions.jsonl")
      ->required();
  mine_cmd->add_option("--algo", mine_options.algorithm,
                       "apriori|fpgrowth|eclat|relim|all");
  mine_cmd->add_option("--support", mine_options.support,
                       "Minimum support fraction");
  mine_cmd->add_option("--out", mine_options.out, "Output itemsets CSV")
      ->required();

  RulesOptions rules;
  auto* rules_cmd = app.add_subcommand(
      "rules", "Mine a training set and emit association rules");
  rules_cmd->add_option("--in", rules.in, "Input train.jsonl")->required();
  rules_cmd->add_option("--algo", rules.algorithm,
                        "apriori|fpgrowth|eclat|relim|all");
  rules_cmd->add_option("--support", rules.support, "Minimum support fraction");
  rules_cmd->add_option("--confidence", rules.confidence,
                        "Minimum confidence fraction");
  rules_cmd->add_option("--out", rules.out, "Output rules.csv")->required();

  RecommendOptions recommend;
  auto* recommend_cmd = app.add_subcommand(
      "recommend", "Rank co-change suggestions for a file from rules.csv");
  recommend_cmd->add_option("--rules", recommend.rules, "Input rules.csv")
      ->required();
  recommend_cmd->add_option("--file", recommend.file, "Query file path")
      ->required();
  recommend_cmd->add_option("--limit", recommend.limit,
                            "Maximum number of suggestions (0 = all)");
  recommend_cmd->add_option(
      "--train", recommend.train,
      "Training transactions; widens the known-file check");

  EvaluateOptions evaluate;
  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "Score recommendations against a test set");
  evaluate_cmd->add_option("--train", evaluate.train, "Input train.jsonl")
      ->required();
  evaluate_cmd->add_option("--test", evaluate.test, "Input test.jsonl")
      ->required();
  evaluate_cmd->add_option("--algo", evaluate.algorithm,
                           "apriori|fpgrowth|eclat|relim|all");
  evaluate_cmd->add_option("--support", evaluate.support,
                           "Minimum support fraction");
  evaluate_cmd->add_option("--confidence", evaluate.confidence,
                           "Minimum confidence fraction");
  evaluate_cmd->add_option("--out", evaluate.out, "Output metrics.csv")
      ->required();
  evaluate_cmd->add_option("--per-query", evaluate.per_query,
                           "Also write per-query metrics CSV");

  SweepOptions sweep_options;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Evaluate a support x confidence parameter grid");
  sweep_cmd->add_option("--train", sweep_options.train, "Input train.jsonl")
      ->required();
  sweep_cmd->add_option("--test", sweep_options.test, "Input test.jsonl")
      ->required();
  sweep_cmd->add_option("--algo", sweep_options.algorithm,
                        "apriori|fpgrowth|eclat|relim|all");
  sweep_cmd->add_option("--supports", sweep_options.supports,
                        "Comma-separated ascending support grid");
  sweep_cmd->add_option("--confidences", sweep_options.confidences,
                        "Comma-separated ascending confidence grid");
  sweep_cmd->add_option("--jobs", sweep_options.jobs,
                        "Concurrent sweep workers");
  sweep_cmd->add_option("--out", sweep_options.out, "Output sweep CSV")
      ->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time mining plus rule generation per algorithm");
  bench_cmd->add_option("--in", bench.in, "Input transactions.jsonl")
      ->required();
  bench_cmd->add_option("--algo", bench.algorithm,
                        "apriori|fpgrowth|eclat|relim|all");
  bench_cmd->add_option("--support", bench.support, "Minimum support fraction");
  bench_cmd->add_option("--confidence", bench.confidence,
                        "Minimum confidence fraction");
  bench_cmd->add_option("--reps", bench.repetitions,
                        "Repetitions; the minimum is reported");
  bench_cmd->add_option("--out", bench.out, "Output timing.csv")->required();

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Pairwise statistical comparison from sweep/metrics CSV");
  compare_cmd->add_option("--in", compare.in, "Input sweep or metrics CSV")
      ->required();
  compare_cmd->add_option("--out", compare.out, "Output compare.csv")
      ->required();
  compare_cmd->add_option("--markdown", compare.markdown,
                          "Also write a Markdown table");

  PipelineOptions pipeline;
  auto* pipeline_cmd = app.add_subcommand(
      "pipeline", "extract, prepare, rules and evaluate in one run");
  pipeline_cmd->add_option("--repo", pipeline.repo, "Path to the repository")
      ->required();
  pipeline_cmd->add_option("--ext", pipeline.extension,
                           "File extension filter");
  pipeline_cmd->add_option("--algo", pipeline.algorithm,
                           "apriori|fpgrowth|eclat|relim|all");
  pipeline_cmd->add_option("--support", pipeline.support,
                           "Minimum support fraction");
  pipeline_cmd->add_option("--confidence", pipeline.confidence,
                           "Minimum confidence fraction");
  pipeline_cmd->add_option("--outdir", pipeline.outdir, "Output directory");

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand(
      "synth", "Generate a seeded synthetic transaction database");
  synth_cmd->add_option("--seed", synth.seed, "Generator seed")->required();
  synth_cmd->add_option("--items", synth.items, "Universe size");
  synth_cmd->add_option("--transactions", synth.transactions,
                        "Transaction count");
  synth_cmd->add_option("--density", synth.density,
                        "Expected fraction of the universe per transaction");
  synth_cmd->add_option("--groups", synth.groups,
                        "Planted co-change groups of three items");
  synth_cmd->add_option("--group-prob", synth.group_probability,
                        "Probability a planted group joins a transaction");
  synth_cmd->add_option("--start", synth.start, "First timestamp");
  synth_cmd->add_option("--span-days", synth.span_days,
                        "History span in days");
  synth_cmd->add_option("--out", synth.out, "Output transactions.jsonl")
      ->required();

  try {
    app.parse(argc, argv);

    if (extract_cmd->parsed()) run_extract(extract);
    if (prepare_cmd->parsed()) run_prepare(prepare);
    if (mine_cmd->parsed()) run_mine(mine_options);
    if (rules_cmd->parsed()) run_rules(rules);
    if (recommend_cmd->parsed()) run_recommend(recommend);
    if (evaluate_cmd->parsed()) run_evaluate(evaluate);
    if (sweep_cmd->parsed()) run_sweep(sweep_options);
    if (bench_cmd->parsed()) run_bench(bench);
    if (compare_cmd->parsed()) run_compare(compare);
    if (pipeline_cmd->parsed()) run_pipeline(pipeline);
    if (synth_cmd->parsed()) run_synth(synth);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
