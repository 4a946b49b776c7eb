#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "cochange/errors.hpp"
#include "cochange/stats.hpp"
#include "cochange/synth.hpp"
#include "oracles.hpp"

using namespace cochange;
using cochange::testsupport::wilcoxon_enumeration_p;

TEST_CASE("five uniform differences give the textbook exact p") {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> y{2, 3, 4, 5, 6};
  const auto result = wilcoxon_signed_rank(x, y);
  CHECK(result.p_value == 0.0625);  // 2 / 2^5
  CHECK(result.exact);
  CHECK(result.n_used == 5);
  CHECK_FALSE(result.all_zero);
  CHECK(result.w_plus == 0.0);
  CHECK(result.w_minus == 15.0);
}

TEST_CASE("identical samples flag all-zero and report p = 1") {
  const std::vector<double> x{0.4, 0.5, 0.6};
  const auto result = wilcoxon_signed_rank(x, x);
  CHECK(result.all_zero);
  CHECK(result.p_value == 1.0);
  CHECK(result.n_used == 0);
}

TEST_CASE("zero differences are dropped before ranking") {
  const std::vector<double> x{1, 2, 3, 4, 5, 9};
  const std::vector<double> y{1, 3, 4, 5, 6, 9};  // two zeros
  const auto result = wilcoxon_signed_rank(x, y);
  CHECK(result.n_used == 4);
  // Remaining differences are all -1: p = 2/2^4.
  CHECK(result.p_value == 0.125);
}

TEST_CASE("the test is symmetric in its arguments") {
  Rng rng(13);
  for (int round = 0; round < 50; ++round) {
    std::vector<double> x, y;
    const std::size_t n = 2 + rng.below(9);
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(static_cast<double>(rng.below(8)) / 2.0);
      y.push_back(static_cast<double>(rng.below(8)) / 2.0);
    }
    CHECK(wilcoxon_signed_rank(x, y).p_value ==
          wilcoxon_signed_rank(y, x).p_value);
  }
}

TEST_CASE("exact p matches the full enumeration oracle") {
  Rng rng(31415);
  for (int round = 0; round < 100; ++round) {
    std::vector<double> x, y;
    const std::size_t n = 1 + rng.below(10);
    for (std::size_t i = 0; i < n; ++i) {
      // Small integer grids force plenty of ties and zeros.
      x.push_back(static_cast<double>(rng.below(6)));
      y.push_back(static_cast<double>(rng.below(6)));
    }
    const auto implementation = wilcoxon_signed_rank(x, y);
    const double oracle = wilcoxon_enumeration_p(x, y);
    CHECK(implementation.p_value == oracle);
  }
}

TEST_CASE("normal approximation tracks the exact test at n = 8") {
  Rng rng(2718);
  int checked = 0;
  for (int round = 0; round < 100 && checked < 40; ++round) {
    std::vector<double> x, y;
    for (int i = 0; i < 8; ++i) {
      x.push_back(rng.unit());
      y.push_back(rng.unit());
    }
    const auto exact = wilcoxon_signed_rank(x, y, WilcoxonMethod::exact);
    const auto approx =
        wilcoxon_signed_rank(x, y, WilcoxonMethod::normal_approx);
    CHECK(std::abs(exact.p_value - approx.p_value) < 0.05);
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("large samples switch to the normal approximation") {
  std::vector<double> x, y;
  Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    x.push_back(rng.unit());
    y.push_back(rng.unit() * 0.8);
  }
  const auto result = wilcoxon_signed_rank(x, y);
  CHECK_FALSE(result.exact);
  CHECK(result.p_value >= 0.0);
  CHECK(result.p_value <= 1.0);
}

TEST_CASE("mismatched sample lengths are rejected") {
  const std::vector<double> x{1, 2};
  const std::vector<double> y{1};
  CHECK_THROWS_AS(wilcoxon_signed_rank(x, y), MisalignedSamplesError);
}

TEST_CASE("holm adjustment matches the hand-worked example") {
  const std::vector<double> p{0.01, 0.02, 0.2};
  const auto adjusted = holm_adjust(p);
  REQUIRE(adjusted.size() == 3);
  CHECK(adjusted[0] == doctest::Approx(0.03).epsilon(1e-12));
  CHECK(adjusted[1] == doctest::Approx(0.04).epsilon(1e-12));
  CHECK(adjusted[2] == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("holm keeps single values and enforces monotonicity") {
  CHECK(holm_adjust(std::vector<double>{0.5}) == std::vector<double>{0.5});

  const std::vector<double> tied{0.04, 0.04, 0.04};
  const auto adjusted = holm_adjust(tied);
  for (const double value : adjusted) {
    CHECK(value == doctest::Approx(0.12).epsilon(1e-12));
  }

  const std::vector<double> clamped{0.9, 0.95};
  const auto capped = holm_adjust(clamped);
  CHECK(capped[0] <= 1.0);
  CHECK(capped[1] <= 1.0);
  CHECK(capped[0] <= capped[1]);
}

TEST_CASE("holm output is permutation-equivariant") {
  const std::vector<double> p{0.3, 0.01, 0.07, 0.02};
  const auto direct = holm_adjust(p);
  const std::vector<double> permuted{0.01, 0.02, 0.07, 0.3};
  const auto adjusted_permuted = holm_adjust(permuted);
  CHECK(direct[1] == adjusted_permuted[0]);
  CHECK(direct[3] == adjusted_permuted[1]);
  CHECK(direct[2] == adjusted_permuted[2]);
  CHECK(direct[0] == adjusted_permuted[3]);
}

TEST_CASE("cliffs delta spans dominance to symmetry") {
  const std::vector<double> high{4, 5, 6};
  const std::vector<double> low{1, 2, 3};
  const auto dominant = cliffs_delta(high, low);
  CHECK(dominant.d == 1.0);
  CHECK(dominant.magnitude == EffectMagnitude::large);

  const auto equal = cliffs_delta(high, high);
  CHECK(equal.d == 0.0);
  CHECK(equal.magnitude == EffectMagnitude::negligible);

  const std::vector<double> middle{2};
  const std::vector<double> spread{1, 3};
  const auto balanced = cliffs_delta(middle, spread);
  CHECK(balanced.d == 0.0);
  CHECK(balanced.magnitude == EffectMagnitude::negligible);
}

TEST_CASE("cliffs delta is antisymmetric and bounded") {
  Rng rng(123);
  for (int round = 0; round < 30; ++round) {
    std::vector<double> x, y;
    const std::size_t nx = 1 + rng.below(6);
    const std::size_t ny = 1 + rng.below(6);
    for (std::size_t i = 0; i < nx; ++i) x.push_back(rng.unit());
    for (std::size_t i = 0; i < ny; ++i) y.push_back(rng.unit());
    const auto xy = cliffs_delta(x, y);
    const auto yx = cliffs_delta(y, x);
    CHECK(xy.d == -yx.d);
    CHECK(std::abs(xy.d) <= 1.0);
  }
}

TEST_CASE("magnitude boundaries take the larger class") {
  CHECK(magnitude_of(0.0) == EffectMagnitude::negligible);
  CHECK(magnitude_of(0.1469) == EffectMagnitude::negligible);
  CHECK(magnitude_of(0.147) == EffectMagnitude::small);
  CHECK(magnitude_of(0.3299) == EffectMagnitude::small);
  CHECK(magnitude_of(0.33) == EffectMagnitude::medium);
  CHECK(magnitude_of(0.4739) == EffectMagnitude::medium);
  CHECK(magnitude_of(0.474) == EffectMagnitude::large);
  CHECK(magnitude_of(1.0) == EffectMagnitude::large);
  CHECK(magnitude_of(-0.147) == EffectMagnitude::small);
  CHECK(magnitude_of(-1.0) == EffectMagnitude::large);
}

namespace {

AlgorithmMetricSeries series(const std::string& name,
                             std::vector<double> values) {
  AlgorithmMetricSeries s;
  s.algorithm = name;
  s.precision = values;
  s.recall = values;
  s.f_measure = std::move(values);
  return s;
}

const ComparisonRow& row_of(const ComparisonReport& report,
                            const std::string& pair,
                            const std::string& metric) {
  for (const auto& row : report.rows) {
    if (row.pair == pair && row.metric == metric) return row;
  }
  throw std::runtime_error("missing row " + pair + "/" + metric);
}

}  // namespace

TEST_CASE("identical algorithms compare as indistinguishable") {
  const std::vector<double> values{0.5, 0.6, 0.7, 0.8, 0.9};
  const std::vector<AlgorithmMetricSeries> all{
      series("apriori", values), series("fpgrowth", values),
      series("eclat", values), series("relim", values)};
  const auto report = compare_algorithms(all);
  REQUIRE(report.rows.size() == 18);  // 6 pairs x 3 metrics
  for (const auto& row : report.rows) {
    CHECK(row.p_raw == 1.0);
    CHECK(row.p_holm == 1.0);
    CHECK_FALSE(row.significant);
    CHECK(row.delta == 0.0);
    CHECK(row.magnitude == EffectMagnitude::negligible);
    CHECK(row.all_zero);
  }
}

TEST_CASE("a dominant algorithm shows maximal effect sizes") {
  const std::vector<AlgorithmMetricSeries> all{
      series("apriori", {0.9, 0.91, 0.92, 0.93, 0.94}),
      series("fpgrowth", {0.5, 0.51, 0.52, 0.53, 0.54}),
      series("eclat", {0.4, 0.41, 0.42, 0.43, 0.44}),
      series("relim", {0.3, 0.31, 0.32, 0.33, 0.34})};
  const auto report = compare_algorithms(all);
  for (const auto& metric : {"precision", "recall", "f_measure"}) {
    CHECK(row_of(report, "apriori-fpgrowth", metric).delta == 1.0);
    CHECK(row_of(report, "apriori-eclat", metric).delta == 1.0);
    CHECK(row_of(report, "apriori-relim", metric).delta == 1.0);
    CHECK(row_of(report, "apriori-relim", metric).magnitude ==
          EffectMagnitude::large);
  }
}

TEST_CASE("comparison report matches a hand-computed fixture") {
  // n = 5 aligned configurations. A dominates everything, C equals B.
  const std::vector<AlgorithmMetricSeries> all{
      series("a", {0.9, 0.8, 0.7, 0.6, 0.5}),
      series("b", {0.8, 0.7, 0.6, 0.5, 0.4}),
      series("c", {0.8, 0.7, 0.6, 0.5, 0.4}),
      series("d", {0.4, 0.3, 0.2, 0.1, 0.05})};
  const auto report = compare_algorithms(all);
  REQUIRE(report.rows.size() == 18);

  // Raw p-values: every non-identical pair has five same-sign differences
  // (p = 2/32); b-c is all-zero (p = 1).
  for (const auto& pair :
       {"a-b", "a-c", "a-d", "b-d", "c-d"}) {
    CHECK(row_of(report, pair, "precision").p_raw == 0.0625);
  }
  CHECK(row_of(report, "b-c", "precision").p_raw == 1.0);

  // Holm family of six: five at 0.0625 scale to 6*0.0625 = 0.375 via the
  // running maximum; the 1.0 stays 1.0.
  for (const auto& pair :
       {"a-b", "a-c", "a-d", "b-d", "c-d"}) {
    CHECK(row_of(report, pair, "precision").p_holm == 0.375);
    CHECK_FALSE(row_of(report, pair, "precision").significant);
  }
  CHECK(row_of(report, "b-c", "precision").p_holm == 1.0);

  // Deltas: a vs b shares values shifted by one rank: 15 greater, 6 less
  // of 25 pairs -> 0.36 (medium). a vs d dominates completely -> 1.
  CHECK(row_of(report, "a-b", "recall").delta == doctest::Approx(0.36));
  CHECK(row_of(report, "a-b", "recall").magnitude == EffectMagnitude::medium);
  CHECK(row_of(report, "a-d", "recall").delta == 1.0);
  CHECK(row_of(report, "b-c", "recall").delta == 0.0);
}

TEST_CASE("comparison validates its inputs") {
  std::vector<AlgorithmMetricSeries> misaligned{
      series("a", {0.1, 0.2}), series("b", {0.1})};
  CHECK_THROWS_AS(compare_algorithms(misaligned), MisalignedSamplesError);

  std::vector<AlgorithmMetricSeries> lonely{series("a", {0.1})};
  CHECK_THROWS_AS(compare_algorithms(lonely), std::invalid_argument);
}

TEST_CASE("comparison csv and markdown render every pair") {
  const std::vector<double> values{0.5, 0.6, 0.7};
  const std::vector<AlgorithmMetricSeries> all{
      series("apriori", values), series("fpgrowth", values),
      series("eclat", values), series("relim", values)};
  const auto report = compare_algorithms(all);

  std::ostringstream csv;
  write_comparison_csv(csv, report);
  const auto text = csv.str();
  CHECK(text.find("pair,metric,p_raw,p_holm,cliffs_delta,magnitude,"
                  "significant") == 0);
  CHECK(text.find("apriori-fpgrowth,precision,1.000000,1.000000,0.000000,"
                  "negligible,false") != std::string::npos);
  CHECK(text.find("eclat-relim,f_measure") != std::string::npos);

  const auto markdown = comparison_markdown(report);
  CHECK(markdown.find("| apriori-fpgrowth |") != std::string::npos);
  CHECK(markdown.find("negligible") != std::string::npos);
}
