#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cochange/interner.hpp"
#include "cochange/transaction.hpp"

namespace cochange {

enum class ChangeType { Add, Modify, Rename, Delete };

std::string_view to_string(ChangeType type);

/// One file-level change event. `file` is the repository-relative path (the
/// new path for renames) and always matches the configured extension filter.
struct ChangeRecord {
  std::string change_id;  // commit hash
  std::string log;        // commit subject line
  std::int64_t date = 0;  // committer date, UTC seconds
  ChangeType change_type = ChangeType::Modify;
  std::string file;
  ItemId file_index = 0;
};

struct ExtractionConfig {
  std::filesystem::path repo;
  std::string extension = ".java";  // case-insensitive suffix match
  std::optional<std::int64_t> since;  // inclusive commit-date bounds
  std::optional<std::int64_t> until;
};

struct ExtractionResult {
  std::vector<ChangeRecord> records;
  Interner interner;  // file -> file_index mapping, first-seen order
};

/// Walks the first-parent chain from HEAD via the git command-line tool
/// (merges diffed against their first parent, rename detection on). One
/// record per (commit, matching file) pair, ordered ascending by commit
/// date, then commit id, then file path. Commits with no matching file
/// produce no records.
///
/// Throws RepoNotFoundError, NotAGitRepositoryError or GitReadError.
ExtractionResult extract_history(const ExtractionConfig& config);

/// Groups records into one transaction per commit (files deduplicated).
TransactionDatabase to_transactions(const std::vector<ChangeRecord>& records);

/// records.csv: `change_id,date,change_type,file` with RFC-4180 quoting.
void write_records_csv(std::ostream& out,
                       const std::vector<ChangeRecord>& records);

/// True when `path` ends with `extension`, ignoring ASCII case.
bool matches_extension(std::string_view path, std::string_view extension);

}  // namespace cochange
