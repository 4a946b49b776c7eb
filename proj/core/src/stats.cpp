#include "cochange/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cochange/csv.hpp"
#include "cochange/errors.hpp"

namespace cochange {

namespace {

constexpr std::size_t kExactCutoff = 25;

struct RankedDifferences {
  std::vector<std::uint64_t> doubled_ranks;  // 2x average rank, integral
  std::uint64_t w2_plus = 0;                 // doubled positive rank sum
  std::uint64_t w2_total = 0;                // n(n+1)
  double tie_correction = 0.0;               // sum of t^3 - t over tie groups
};

RankedDifferences rank_differences(const std::vector<double>& diffs) {
  const std::size_t n = diffs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(diffs[a]) < std::abs(diffs[b]);
  });

  RankedDifferences ranked;
  ranked.doubled_ranks.resize(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n &&
           std::abs(diffs[order[j]]) == std::abs(diffs[order[i]])) {
      ++j;
    }
    // Average rank over positions [i, j) (1-based), doubled to stay integral:
    // 2 * ((i+1) + j) / 2 = i + 1 + j.
    const std::uint64_t doubled = static_cast<std::uint64_t>(i) + 1 + j;
    for (std::size_t k = i; k < j; ++k) {
      ranked.doubled_ranks[order[k]] = doubled;
    }
    const auto tie = static_cast<double>(j - i);
    ranked.tie_correction += tie * tie * tie - tie;
    i = j;
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (diffs[k] > 0) ranked.w2_plus += ranked.doubled_ranks[k];
  }
  ranked.w2_total = static_cast<std::uint64_t>(n) * (n + 1);
  return ranked;
}

// Exact two-sided p-value by dynamic programming over the null distribution
// of the doubled rank sum: doubles the lower tail at min(W+, W-).
double exact_p(const RankedDifferences& ranked, std::size_t n) {
  const std::uint64_t limit = ranked.w2_total;
  std::vector<double> ways(limit + 1, 0.0);
  ways[0] = 1.0;
  for (const std::uint64_t rank : ranked.doubled_ranks) {
    for (std::uint64_t w = limit; w + 1 > rank; --w) {
      if (ways[w - rank] > 0.0) ways[w] += ways[w - rank];
    }
  }
  const std::uint64_t w2_min =
      std::min(ranked.w2_plus, ranked.w2_total - ranked.w2_plus);
  double tail = 0.0;
  for (std::uint64_t w = 0; w <= w2_min; ++w) tail += ways[w];
  const double p = 2.0 * tail / std::ldexp(1.0, static_cast<int>(n));
  return std::min(1.0, p);
}

double normal_approx_p(const RankedDifferences& ranked, std::size_t n) {
  const double dn = static_cast<double>(n);
  const double w_plus = static_cast<double>(ranked.w2_plus) / 2.0;
  const double mean = dn * (dn + 1.0) / 4.0;
  const double variance = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 -
                          ranked.tie_correction / 48.0;
  if (variance <= 0.0) return 1.0;
  const double centered = w_plus - mean;
  const double continuity = centered > 0 ? -0.5 : (centered < 0 ? 0.5 : 0.0);
  const double z = (centered + continuity) / std::sqrt(variance);
  const double p = std::erfc(std::abs(z) / std::sqrt(2.0));
  return std::min(1.0, p);
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y,
                                    WilcoxonMethod method) {
  if (x.size() != y.size()) {
    throw MisalignedSamplesError(
        "paired samples must have equal length: " + std::to_string(x.size()) +
        " vs " + std::to_string(y.size()));
  }

  std::vector<double> diffs;
  diffs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d != 0.0) diffs.push_back(d);
  }

  WilcoxonResult result;
  result.n_used = diffs.size();
  if (diffs.empty()) {
    result.all_zero = true;
    result.p_value = 1.0;
    result.exact = true;
    return result;
  }

  const RankedDifferences ranked = rank_differences(diffs);
  result.w_plus = static_cast<double>(ranked.w2_plus) / 2.0;
  result.w_minus =
      static_cast<double>(ranked.w2_total - ranked.w2_plus) / 2.0;

  const bool use_exact =
      method == WilcoxonMethod::exact ||
      (method == WilcoxonMethod::automatic && diffs.size() <= kExactCutoff);
  result.exact = use_exact;
  result.p_value = use_exact ? exact_p(ranked, diffs.size())
                             : normal_approx_p(ranked, diffs.size());
  return result;
}

std::vector<double> holm_adjust(std::span<const double> p_values) {
  const std::size_t n = p_values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p_values[a] < p_values[b];
  });

  std::vector<double> adjusted(n, 0.0);
  double running_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double scaled =
        p_values[order[i]] * static_cast<double>(n - i);
    running_max = std::max(running_max, scaled);
    adjusted[order[i]] = std::min(1.0, running_max);
  }
  return adjusted;
}

std::string_view to_string(EffectMagnitude magnitude) {
  switch (magnitude) {
    case EffectMagnitude::negligible: return "negligible";
    case EffectMagnitude::small: return "small";
    case EffectMagnitude::medium: return "medium";
    case EffectMagnitude::large: return "large";
  }
  return "unknown";
}

EffectMagnitude magnitude_of(double d) {
  const double a = std::abs(d);
  if (a < 0.147) return EffectMagnitude::negligible;
  if (a < 0.33) return EffectMagnitude::small;
  if (a < 0.474) return EffectMagnitude::medium;
  return EffectMagnitude::large;
}

EffectSize cliffs_delta(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("cliffs_delta requires non-empty samples");
  }
  std::int64_t greater = 0, less = 0;
  for (const double xi : x) {
    for (const double yj : y) {
      if (xi > yj) ++greater;
      else if (xi < yj) ++less;
    }
  }
  EffectSize effect;
  effect.d = static_cast<double>(greater - less) /
             (static_cast<double>(x.size()) * static_cast<double>(y.size()));
  effect.magnitude = magnitude_of(effect.d);
  return effect;
}

ComparisonReport compare_algorithms(
    const std::vector<AlgorithmMetricSeries>& series) {
  if (series.size() < 2) {
    throw std::invalid_argument(
        "compare_algorithms requires at least two algorithms");
  }
  const std::size_t length = series.front().precision.size();
  for (const auto& s : series) {
    if (s.precision.size() != length || s.recall.size() != length ||
        s.f_measure.size() != length) {
      throw MisalignedSamplesError(
          "metric vectors must share one configuration count");
    }
  }

  struct MetricAccessor {
    const char* name;
    const std::vector<double>& (*get)(const AlgorithmMetricSeries&);
  };
  static const MetricAccessor kMetrics[] = {
      {"precision",
       [](const AlgorithmMetricSeries& s) -> const std::vector<double>& {
         return s.precision;
       }},
      {"recall",
       [](const AlgorithmMetricSeries& s) -> const std::vector<double>& {
         return s.recall;
       }},
      {"f_measure",
       [](const AlgorithmMetricSeries& s) -> const std::vector<double>& {
         return s.f_measure;
       }},
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < series.size(); ++i) {
    for (std::size_t j = i + 1; j < series.size(); ++j) {
      pairs.emplace_back(i, j);
    }
  }

  // Rows are emitted pair-major; Holm families group by metric.
  ComparisonReport report;
  report.rows.resize(pairs.size() * std::size(kMetrics));
  for (std::size_t m = 0; m < std::size(kMetrics); ++m) {
    std::vector<double> raw_ps;
    raw_ps.reserve(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& [i, j] = pairs[p];
      const auto& xi = kMetrics[m].get(series[i]);
      const auto& yj = kMetrics[m].get(series[j]);
      const WilcoxonResult test = wilcoxon_signed_rank(xi, yj);
      const EffectSize effect = cliffs_delta(xi, yj);

      ComparisonRow& row = report.rows[p * std::size(kMetrics) + m];
      row.pair = series[i].algorithm + "-" + series[j].algorithm;
      row.metric = kMetrics[m].name;
      row.p_raw = test.p_value;
      row.delta = effect.d;
      row.magnitude = effect.magnitude;
      row.n_used = test.n_used;
      row.all_zero = test.all_zero;
      raw_ps.push_back(test.p_value);
    }
    const auto adjusted = holm_adjust(raw_ps);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      ComparisonRow& row = report.rows[p * std::size(kMetrics) + m];
      row.p_holm = adjusted[p];
      row.significant = adjusted[p] < kSignificanceLevel;
    }
  }
  return report;
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& report) {
  out << "pair,metric,p_raw,p_holm,cliffs_delta,magnitude,significant\n";
  for (const ComparisonRow& row : report.rows) {
    out << csv_line({csv_field(row.pair), row.metric, fixed6(row.p_raw),
                     fixed6(row.p_holm), fixed6(row.delta),
                     std::string(to_string(row.magnitude)),
                     row.significant ? "true" : "false"})
        << '\n';
  }
}

std::string comparison_markdown(const ComparisonReport& report) {
  std::ostringstream out;
  out << "| Algorithm pair | Precision p | Precision delta | Recall p | "
         "Recall delta | F-measure p | F-measure delta | n |\n";
  out << "| --- | --- | --- | --- | --- | --- | --- | --- |\n";
  for (std::size_t i = 0; i + 2 < report.rows.size(); i += 3) {
    const ComparisonRow& precision = report.rows[i];
    const ComparisonRow& recall = report.rows[i + 1];
    const ComparisonRow& f_measure = report.rows[i + 2];
    out << "| " << precision.pair << " | " << fixed6(precision.p_holm) << " | "
        << fixed6(precision.delta) << " (" << to_string(precision.magnitude)
        << ") | " << fixed6(recall.p_holm) << " | " << fixed6(recall.delta)
        << " (" << to_string(recall.magnitude) << ") | "
        << fixed6(f_measure.p_holm) << " | " << fixed6(f_measure.delta) << " ("
        << to_string(f_measure.magnitude) << ") | " << precision.n_used
        << " |\n";
  }
  return out.str();
}

}  // namespace cochange
