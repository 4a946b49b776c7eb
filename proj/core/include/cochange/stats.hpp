#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cochange {

inline constexpr double kSignificanceLevel = 0.05;

enum class WilcoxonMethod { automatic, exact, normal_approx };

struct WilcoxonResult {
  double p_value = 1.0;       // two-sided
  double w_plus = 0.0;        // positive-difference rank sum
  double w_minus = 0.0;
  std::size_t n_used = 0;     // pairs remaining after dropping zeros
  bool all_zero = false;      // identical samples; p reported as 1.0
  bool exact = false;         // exact null distribution vs normal approx
};

/// Two-sided Wilcoxon signed-rank test. Zero differences are dropped, tied
/// magnitudes receive average ranks. The exact null distribution (all sign
/// assignments) is used for n <= 25, a normal approximation with continuity
/// correction beyond. Identical samples yield p = 1.0 with the all_zero
/// flag set rather than an error.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y,
                                    WilcoxonMethod method =
                                        WilcoxonMethod::automatic);

/// Holm step-down adjustment: the i-th smallest p-value is multiplied by
/// (n - i + 1), made monotone by a running maximum, clamped at 1. Results
/// come back in input order.
std::vector<double> holm_adjust(std::span<const double> p_values);

enum class EffectMagnitude { negligible, small, medium, large };

std::string_view to_string(EffectMagnitude magnitude);

/// |d| < 0.147 negligible, < 0.33 small, < 0.474 medium, else large;
/// boundary values take the larger class.
EffectMagnitude magnitude_of(double d);

struct EffectSize {
  double d = 0.0;  // in [-1, 1]
  EffectMagnitude magnitude = EffectMagnitude::negligible;
};

/// d = (#{x_i > y_j} - #{x_i < y_j}) / (|x| * |y|).
EffectSize cliffs_delta(std::span<const double> x, std::span<const double> y);

/// Aligned per-configuration metric vectors for one algorithm.
struct AlgorithmMetricSeries {
  std::string algorithm;
  std::vector<double> precision;
  std::vector<double> recall;
  std::vector<double> f_measure;
};

struct ComparisonRow {
  std::string pair;    // "<a>-<b>"
  std::string metric;  // precision | recall | f_measure
  double p_raw = 1.0;
  double p_holm = 1.0;
  bool significant = false;  // p_holm < 0.05
  double delta = 0.0;
  EffectMagnitude magnitude = EffectMagnitude::negligible;
  std::size_t n_used = 0;
  bool all_zero = false;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;  // pair-major, metrics P/R/F within
};

/// Pairwise Wilcoxon tests over every unordered algorithm pair, Holm
/// adjustment applied within each metric's family, Cliff's delta per pair.
/// Throws MisalignedSamplesError when vector lengths differ.
ComparisonReport compare_algorithms(
    const std::vector<AlgorithmMetricSeries>& series);

/// compare.csv: `pair,metric,p_raw,p_holm,cliffs_delta,magnitude,significant`
void write_comparison_csv(std::ostream& out, const ComparisonReport& report);

/// Markdown table, one row per pair, P/R/F column groups.
std::string comparison_markdown(const ComparisonReport& report);

}  // namespace cochange
