#include "cochange/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace cochange {

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t value;
  do {
    value = next_u64();
  } while (value >= limit);
  return value % bound;
}

double Rng::unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

TransactionDatabase make_synthetic_db(const SynthConfig& config) {
  if (config.items == 0) {
    throw std::invalid_argument("synthetic database needs at least one item");
  }
  if (3ull * config.pattern_groups > config.items) {
    throw std::invalid_argument(
        "pattern groups need 3 items each within the universe");
  }

  Rng rng(config.seed);

  // Popularity weights 1/(rank+1), scaled so the expected transaction size
  // is about density * items.
  std::vector<double> include_probability(config.items);
  double weight_sum = 0.0;
  for (std::uint32_t i = 0; i < config.items; ++i) {
    weight_sum += 1.0 / static_cast<double>(i + 1);
  }
  const double target_size =
      config.density * static_cast<double>(config.items);
  for (std::uint32_t i = 0; i < config.items; ++i) {
    const double weight = 1.0 / static_cast<double>(i + 1);
    include_probability[i] = std::min(1.0, target_size * weight / weight_sum);
  }

  std::vector<RawTransaction> raw;
  raw.reserve(config.transactions);
  const std::int64_t step =
      config.transactions > 0
          ? std::max<std::int64_t>(1, config.span_seconds /
                                          config.transactions)
          : 1;

  std::vector<std::uint32_t> picked;
  for (std::uint32_t t = 0; t < config.transactions; ++t) {
    picked.clear();
    for (std::uint32_t i = 0; i < config.items; ++i) {
      if (rng.bernoulli(include_probability[i])) picked.push_back(i);
    }
    for (std::uint32_t g = 0; g < config.pattern_groups; ++g) {
      if (rng.bernoulli(config.group_probability)) {
        picked.push_back(3 * g);
        picked.push_back(3 * g + 1);
        picked.push_back(3 * g + 2);
      }
    }
    if (picked.empty()) {
      picked.push_back(static_cast<std::uint32_t>(rng.below(config.items)));
    }
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());

    RawTransaction txn;
    char id[24];
    std::snprintf(id, sizeof(id), "synth-%08u", t);
    txn.id = id;
    txn.timestamp = config.start_timestamp + static_cast<std::int64_t>(t) * step;
    txn.files.reserve(picked.size());
    for (const std::uint32_t item : picked) {
      char file[32];
      std::snprintf(file, sizeof(file), "src/item_%05u.java", item);
      txn.files.push_back(file);
    }
    raw.push_back(std::move(txn));
  }
  return TransactionDatabase::build(std::move(raw));
}

}  // namespace cochange
