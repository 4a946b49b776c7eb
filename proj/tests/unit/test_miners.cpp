#include <doctest.h>

#include <sstream>
#include <vector>

#include "cochange/errors.hpp"
#include "cochange/fptree.hpp"
#include "cochange/miners.hpp"
#include "cochange/synth.hpp"
#include "oracles.hpp"

using namespace cochange;
using cochange::testsupport::random_small_db;
using cochange::testsupport::scan_support;
using cochange::testsupport::worked_example_db;

namespace {

// min_support 0.2 on 9 transactions gives a support-count threshold of 2.
const MiningParams kExampleParams{0.2, 0.1};

std::vector<ItemId> ids_of(const TransactionDatabase& db,
                           const std::vector<std::string>& paths) {
  std::vector<ItemId> ids;
  for (const auto& path : paths) {
    const auto id = db.interner().find(path);
    REQUIRE(id.has_value());
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

TEST_CASE("support-count threshold rounds up and never drops below one") {
  CHECK(MiningParams{0.2, 0.1}.min_support_count(9) == 2);
  CHECK(MiningParams{0.1, 0.1}.min_support_count(30) == 3);
  CHECK(MiningParams{0.5, 0.1}.min_support_count(7) == 4);
  CHECK(MiningParams{1.0, 0.1}.min_support_count(12) == 12);
  CHECK(MiningParams{1.0 / 30.0, 0.1}.min_support_count(30) == 1);
  CHECK(MiningParams{0.0001, 0.1}.min_support_count(5) == 1);
}

TEST_CASE("params validation rejects out-of-range fractions") {
  CHECK_THROWS_AS((MiningParams{0.0, 0.5}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((MiningParams{1.5, 0.5}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((MiningParams{0.5, 0.0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((MiningParams{1.0, 1.0}.validate()));
}

TEST_CASE("brute force finds exactly the worked-example 3-itemsets") {
  const auto db = worked_example_db();
  const auto mined = mine_bruteforce(db, kExampleParams);

  CHECK(mined.count_of(ids_of(db, {"I1", "I2", "I3"})) == 2);
  CHECK(mined.count_of(ids_of(db, {"I1", "I2", "I5"})) == 2);
  CHECK_FALSE(mined.contains(ids_of(db, {"I1", "I4"})));

  std::size_t three_itemsets = 0;
  for (const auto& [items, count] : mined) {
    if (items.size() == 3) ++three_itemsets;
    CHECK(items.size() <= 3);
  }
  CHECK(three_itemsets == 2);
}

TEST_CASE("threshold of one makes every transaction subset frequent") {
  const auto db = worked_example_db();
  const MiningParams params{1.0 / 9.0, 0.1};
  REQUIRE(params.min_support_count(db.size()) == 1);
  const auto mined = mine_bruteforce(db, params);
  for (const auto& txn : db.transactions()) {
    const auto& items = txn.items;
    for (std::uint32_t mask = 1; mask < (1u << items.size()); ++mask) {
      std::vector<ItemId> subset;
      for (std::size_t bit = 0; bit < items.size(); ++bit) {
        if (mask & (1u << bit)) subset.push_back(items[bit]);
      }
      CHECK(mined.contains(subset));
    }
  }
}

TEST_CASE("brute force rejects transactions above the subset guard") {
  std::vector<std::string> files;
  for (int i = 0; i < 21; ++i) files.push_back("f" + std::to_string(i));
  auto db = TransactionDatabase::build({RawTransaction{"big", 1, files}});
  CHECK_THROWS_AS(mine_bruteforce(db, kExampleParams), OracleLimitError);
}

TEST_CASE("apriori reproduces the worked-example supports") {
  const auto db = worked_example_db();
  const auto mined = mine_apriori(db, kExampleParams);

  CHECK(mined.count_of(ids_of(db, {"I1"})) == 6);
  CHECK(mined.count_of(ids_of(db, {"I2"})) == 7);
  CHECK(mined.count_of(ids_of(db, {"I3"})) == 6);
  CHECK(mined.count_of(ids_of(db, {"I4"})) == 2);
  CHECK(mined.count_of(ids_of(db, {"I5"})) == 2);

  CHECK(mined.count_of(ids_of(db, {"I1", "I2"})) == 4);
  CHECK(mined.count_of(ids_of(db, {"I1", "I3"})) == 4);
  CHECK(mined.count_of(ids_of(db, {"I1", "I5"})) == 2);
  CHECK(mined.count_of(ids_of(db, {"I2", "I3"})) == 4);
  CHECK(mined.count_of(ids_of(db, {"I2", "I4"})) == 2);
  CHECK(mined.count_of(ids_of(db, {"I2", "I5"})) == 2);
  CHECK_FALSE(mined.contains(ids_of(db, {"I1", "I4"})));
  CHECK_FALSE(mined.contains(ids_of(db, {"I3", "I5"})));
}

TEST_CASE("all four algorithms match brute force on the worked example") {
  const auto db = worked_example_db();
  const auto oracle = mine_bruteforce(db, kExampleParams);
  for (const Algorithm algorithm : kAllAlgorithms) {
    CHECK(mine(algorithm, db, kExampleParams) == oracle);
  }
}

TEST_CASE("single transaction with threshold one yields all subsets") {
  auto db = TransactionDatabase::build({RawTransaction{"c", 1, {"a", "b"}}});
  const MiningParams params{1.0, 0.1};
  const auto mined = mine_fpgrowth(db, params);
  CHECK(mined.size() == 3);
  CHECK(mined.count_of(ids_of(db, {"a"})) == 1);
  CHECK(mined.count_of(ids_of(db, {"b"})) == 1);
  CHECK(mined.count_of(ids_of(db, {"a", "b"})) == 1);
}

TEST_CASE("fp-tree header chains account for the full item support") {
  const auto db = worked_example_db();
  const auto tree =
      FPTree::from_database(db, kExampleParams.min_support_count(db.size()));
  REQUIRE_FALSE(tree.empty());

  // Header is ordered by descending support; the top entry is I2 with 7.
  const auto& header = tree.header();
  CHECK(header.front().item == *db.interner().find("I2"));
  CHECK(header.front().support == 7);

  for (const auto& entry : header) {
    std::uint32_t chained = 0;
    for (const FPNode* node = entry.head; node != nullptr;
         node = node->next_same_item) {
      CHECK(node->item == entry.item);
      chained += node->count;
    }
    CHECK(chained == entry.support);
    const ItemId single[] = {entry.item};
    CHECK(entry.support == scan_support(db, single));
  }
}

TEST_CASE("fp-tree paths are ordered by header rank") {
  const auto db = worked_example_db();
  const auto tree =
      FPTree::from_database(db, kExampleParams.min_support_count(db.size()));

  std::vector<std::size_t> rank(db.universe(), 0);
  for (std::size_t i = 0; i < tree.header().size(); ++i) {
    rank[tree.header()[i].item] = i;
  }

  std::vector<const FPNode*> stack{&tree.root()};
  while (!stack.empty()) {
    const FPNode* node = stack.back();
    stack.pop_back();
    for (const auto& child : node->children) {
      if (node->parent != nullptr) {
        CHECK(rank[child->item] > rank[node->item]);
      }
      CHECK(child->parent == node);
      stack.push_back(child.get());
    }
  }
}

TEST_CASE("relim handles degenerate databases") {
  auto empty_after_filter = TransactionDatabase::build(
      {RawTransaction{"c1", 1, {"a"}}, RawTransaction{"c2", 2, {"b"}}});
  const auto nothing = mine_relim(empty_after_filter, MiningParams{1.0, 0.1});
  CHECK(nothing.empty());

  auto single = TransactionDatabase::build(
      {RawTransaction{"c1", 1, {"x"}}, RawTransaction{"c2", 2, {"x"}}});
  const auto mined = mine_relim(single, MiningParams{1.0, 0.1});
  CHECK(mined.size() == 1);
  CHECK(mined.count_of(ids_of(single, {"x"})) == 2);
}

TEST_CASE("four-way equivalence against brute force on random databases") {
  Rng rng(0xC0C0A);
  const double supports[] = {0.0, 0.1, 0.2, 0.5};  // 0.0 stands for 1/|D|
  for (int round = 0; round < 200; ++round) {
    const auto db = random_small_db(rng, 12, 30);
    for (const double s : supports) {
      const MiningParams params{
          s == 0.0 ? 1.0 / static_cast<double>(db.size()) : s, 0.1};
      const auto oracle = mine_bruteforce(db, params);
      CHECK(mine_apriori(db, params) == oracle);
      CHECK(mine_fpgrowth(db, params) == oracle);
      CHECK(mine_eclat(db, params) == oracle);
      CHECK(mine_relim(db, params) == oracle);
    }
  }
}

TEST_CASE("itemset supports match a direct scan") {
  Rng rng(555);
  const auto db = random_small_db(rng, 10, 25);
  const MiningParams params{0.15, 0.1};
  for (const auto& [items, count] : mine_eclat(db, params)) {
    CHECK(count == scan_support(db, items));
  }
}

TEST_CASE("downward closure holds for mined itemsets") {
  Rng rng(777);
  for (int round = 0; round < 30; ++round) {
    const auto db = random_small_db(rng, 10, 25);
    const MiningParams params{0.2, 0.1};
    const auto mined = mine_fpgrowth(db, params);
    for (const auto& [items, count] : mined) {
      if (items.size() < 2) continue;
      for (std::size_t drop = 0; drop < items.size(); ++drop) {
        std::vector<ItemId> subset;
        for (std::size_t i = 0; i < items.size(); ++i) {
          if (i != drop) subset.push_back(items[i]);
        }
        const auto subset_count = mined.count_of(subset);
        REQUIRE(subset_count.has_value());
        CHECK(*subset_count >= count);
      }
    }
  }
}

TEST_CASE("raising min_support never adds itemsets") {
  Rng rng(888);
  for (int round = 0; round < 30; ++round) {
    const auto db = random_small_db(rng, 10, 25);
    const auto low = mine_apriori(db, MiningParams{0.1, 0.1});
    const auto high = mine_apriori(db, MiningParams{0.3, 0.1});
    for (const auto& [items, count] : high) {
      CHECK(low.count_of(items) == count);
    }
    CHECK(high.size() <= low.size());
  }
}

TEST_CASE("mining output serializes identically across runs") {
  Rng rng(1234);
  const auto db = random_small_db(rng, 10, 25);
  const MiningParams params{0.2, 0.1};
  std::ostringstream first, second;
  write_itemsets_csv(first, mine_relim(db, params), db.interner());
  write_itemsets_csv(second, mine_relim(db, params), db.interner());
  CHECK(first.str() == second.str());
  CHECK_FALSE(first.str().empty());
}

TEST_CASE("algorithm names round-trip") {
  for (const Algorithm algorithm : kAllAlgorithms) {
    CHECK(parse_algorithm(to_string(algorithm)) == algorithm);
  }
  CHECK_FALSE(parse_algorithm("bogus").has_value());
}
