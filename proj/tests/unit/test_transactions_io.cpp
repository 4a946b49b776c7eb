#include <doctest.h>

#include <sstream>

#include "cochange/errors.hpp"
#include "cochange/synth.hpp"
#include "cochange/transactions_io.hpp"
#include "oracles.hpp"

using namespace cochange;
using cochange::testsupport::worked_example_db;

TEST_CASE("serialized lines follow the documented shape") {
  auto db = TransactionDatabase::build({
      RawTransaction{"abc123", 1577836800, {"z.java", "a.java"}},
      RawTransaction{"def456", 1577840400, {"solo.java"}},
  });
  std::ostringstream out;
  write_transactions(out, db);
  CHECK(out.str() ==
        "{\"id\": \"abc123\", \"ts\": \"2020-01-01T00:00:00Z\", "
        "\"files\": [\"a.java\", \"z.java\"]}\n"
        "{\"id\": \"def456\", \"ts\": \"2020-01-01T01:00:00Z\", "
        "\"files\": [\"solo.java\"]}\n");
}

TEST_CASE("write then read is the identity") {
  Rng rng(1701);
  for (int round = 0; round < 10; ++round) {
    const auto db = testsupport::random_small_db(rng, 12, 30);
    std::stringstream buffer;
    write_transactions(buffer, db);
    const auto reread = read_transactions(buffer, "<memory>");
    CHECK(reread == db);
  }

  const auto example = worked_example_db();
  std::stringstream buffer;
  write_transactions(buffer, example);
  CHECK(read_transactions(buffer, "<memory>") == example);
}

TEST_CASE("empty database round-trips to an empty file") {
  const auto db = TransactionDatabase::build({});
  std::stringstream buffer;
  write_transactions(buffer, db);
  CHECK(buffer.str().empty());
  CHECK(read_transactions(buffer, "<memory>").empty());
}

TEST_CASE("special characters in paths survive the round trip") {
  auto db = TransactionDatabase::build({
      RawTransaction{"c1", 100, {"sp ace.java", "quo\"te.java", "uni\xc3\xa9.java"}},
  });
  std::stringstream buffer;
  write_transactions(buffer, db);
  const auto reread = read_transactions(buffer, "<memory>");
  CHECK(reread == db);
}

TEST_CASE("non-JSON lines are rejected with their line number") {
  std::stringstream bad(
      "{\"id\": \"a\", \"ts\": \"2020-01-01T00:00:00Z\", \"files\": []}\n"
      "this is not json\n");
  try {
    read_transactions(bad, "input.jsonl");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("input.jsonl:2") != std::string::npos);
  }
}

TEST_CASE("unsorted or duplicated files are rejected") {
  std::stringstream unsorted(
      "{\"id\": \"a\", \"ts\": \"2020-01-01T00:00:00Z\", "
      "\"files\": [\"b.java\", \"a.java\"]}\n");
  CHECK_THROWS_AS(read_transactions(unsorted, "x"), FormatError);

  std::stringstream duplicated(
      "{\"id\": \"a\", \"ts\": \"2020-01-01T00:00:00Z\", "
      "\"files\": [\"a.java\", \"a.java\"]}\n");
  CHECK_THROWS_AS(read_transactions(duplicated, "x"), FormatError);
}

TEST_CASE("missing fields and bad timestamps are rejected") {
  std::stringstream no_id(
      "{\"ts\": \"2020-01-01T00:00:00Z\", \"files\": []}\n");
  CHECK_THROWS_AS(read_transactions(no_id, "x"), FormatError);

  std::stringstream bad_ts(
      "{\"id\": \"a\", \"ts\": \"yesterday\", \"files\": []}\n");
  CHECK_THROWS_AS(read_transactions(bad_ts, "x"), FormatError);

  std::stringstream bad_files(
      "{\"id\": \"a\", \"ts\": \"2020-01-01T00:00:00Z\", \"files\": [1]}\n");
  CHECK_THROWS_AS(read_transactions(bad_files, "x"), FormatError);
}

TEST_CASE("reading a missing file reports the path") {
  CHECK_THROWS_AS(read_transactions("/nonexistent/missing.jsonl"), Error);
}
