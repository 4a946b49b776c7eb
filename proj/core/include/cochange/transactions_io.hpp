#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "cochange/transaction.hpp"

namespace cochange {

/// transactions.jsonl: one object per line,
/// `{"id": "<hash>", "ts": "YYYY-MM-DDThh:mm:ssZ", "files": ["a", "b"]}`
/// with files sorted lexicographically and unique; UTF-8, LF endings.
void write_transactions(std::ostream& out, const TransactionDatabase& db);
void write_transactions(const std::filesystem::path& path,
                        const TransactionDatabase& db);

/// Throws FormatError naming the offending line on malformed input
/// (non-JSON lines, missing fields, unsorted or duplicated files).
TransactionDatabase read_transactions(std::istream& in,
                                      std::string_view source_name);
TransactionDatabase read_transactions(const std::filesystem::path& path);

}  // namespace cochange
