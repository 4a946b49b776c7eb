#pragma once

#include <cstdint>

#include "cochange/transaction.hpp"

namespace cochange {

/// Deterministic random helpers (splitmix64). Bounded draws use rejection
/// sampling, so sequences are reproducible across platforms and never
/// depend on a library distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  double unit();                             // uniform in [0, 1)
  bool bernoulli(double probability) { return unit() < probability; }

 private:
  std::uint64_t state_;
};

/// Seeded synthetic transaction databases for oracles and benchmarks.
/// Item popularity is skewed (weight 1/(rank+1)); optional planted groups
/// of three items co-occur with `group_probability`, giving the miners real
/// frequent patterns to find.
struct SynthConfig {
  std::uint64_t seed = 0;
  std::uint32_t items = 100;
  std::uint32_t transactions = 1000;
  double density = 0.05;  // expected fraction of the universe per transaction
  std::uint32_t pattern_groups = 0;  // uses items [0, 3*pattern_groups)
  double group_probability = 0.25;
  std::int64_t start_timestamp = 1577836800;  // 2020-01-01T00:00:00Z
  std::int64_t span_seconds = 730ll * 86400;
};

TransactionDatabase make_synthetic_db(const SynthConfig& config);

}  // namespace cochange
