#include "cochange/history.hpp"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "cochange/csv.hpp"
#include "cochange/errors.hpp"
#include "cochange/log.hpp"
#include "cochange/time_utils.hpp"

namespace cochange {

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs git without a shell, streaming stdout into memory; stderr goes to a
// temporary file to avoid pipe deadlocks.
CommandResult run_git(const std::filesystem::path& repo,
                      const std::vector<std::string>& args) {
  int out_pipe[2];
  if (pipe(out_pipe) != 0) throw GitReadError("failed to create pipe");

  std::FILE* err_file = std::tmpfile();
  if (err_file == nullptr) {
    close(out_pipe[0]);
    close(out_pipe[1]);
    throw GitReadError("failed to create temporary file");
  }

  std::vector<std::string> argv_storage;
  argv_storage.push_back("git");
  argv_storage.push_back("--no-pager");
  argv_storage.push_back("-C");
  argv_storage.push_back(repo.string());
  for (const auto& arg : args) argv_storage.push_back(arg);

  std::vector<char*> argv;
  for (auto& arg : argv_storage) argv.push_back(arg.data());
  argv.push_back(nullptr);

  const pid_t pid = fork();
  if (pid < 0) {
    close(out_pipe[0]);
    close(out_pipe[1]);
    std::fclose(err_file);
    throw GitReadError("fork failed");
  }
  if (pid == 0) {
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(fileno(err_file), STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execvp("git", argv.data());
    _exit(127);
  }

  close(out_pipe[1]);
  CommandResult result;
  std::array<char, 65536> buffer;
  ssize_t n;
  while ((n = read(out_pipe[0], buffer.data(), buffer.size())) > 0) {
    result.out.append(buffer.data(), static_cast<std::size_t>(n));
  }
  close(out_pipe[0]);

  int status = 0;
  waitpid(pid, &status, 0);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::rewind(err_file);
  std::size_t got;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), err_file)) > 0) {
    result.err.append(buffer.data(), got);
  }
  std::fclose(err_file);
  return result;
}

std::string first_line(const std::string& text) {
  const auto pos = text.find('\n');
  return pos == std::string::npos ? text : text.substr(0, pos);
}

struct RawCommit {
  std::string hash;
  std::int64_t date = 0;
  std::string subject;
  // (status, path) pairs after rename resolution.
  std::vector<std::pair<ChangeType, std::string>> changes;
};

constexpr char kRecordMark = '\x01';
constexpr char kFieldSep = '\x1f';
constexpr char kHeaderEnd = '\x1e';

ChangeType status_to_type(char status) {
  switch (status) {
    case 'A': return ChangeType::Add;
    case 'C': return ChangeType::Add;  // a copy creates a new file
    case 'M': return ChangeType::Modify;
    case 'T': return ChangeType::Modify;
    case 'D': return ChangeType::Delete;
    case 'R': return ChangeType::Rename;
    default:
      throw GitReadError(std::string("unexpected git status letter: ") +
                         status);
  }
}

// Parses one \x01-delimited commit record from `git log -z --name-status`.
RawCommit parse_commit(std::string_view record,
                       const std::string& extension) {
  RawCommit commit;
  const auto header_end = record.find(kHeaderEnd);
  if (header_end == std::string_view::npos) {
    throw GitReadError("malformed git log record: missing header terminator");
  }
  const std::string_view header = record.substr(0, header_end);
  const auto first_sep = header.find(kFieldSep);
  const auto second_sep =
      first_sep == std::string_view::npos
          ? std::string_view::npos
          : header.find(kFieldSep, first_sep + 1);
  if (second_sep == std::string_view::npos) {
    throw GitReadError("malformed git log record: missing header fields");
  }
  commit.hash = std::string(header.substr(0, first_sep));
  const std::string_view date_text =
      header.substr(first_sep + 1, second_sep - first_sep - 1);
  if (std::from_chars(date_text.data(), date_text.data() + date_text.size(),
                      commit.date)
          .ec != std::errc{}) {
    throw GitReadError("malformed git log record: bad commit date");
  }
  commit.subject = std::string(header.substr(second_sep + 1));

  std::string_view body = record.substr(header_end + 1);
  if (!body.empty() && body.front() == '\n') body.remove_prefix(1);

  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (start < body.size()) {
    const auto nul = body.find('\0', start);
    const auto end = nul == std::string_view::npos ? body.size() : nul;
    if (end > start) tokens.push_back(body.substr(start, end - start));
    if (nul == std::string_view::npos) break;
    start = nul + 1;
  }

  for (std::size_t i = 0; i < tokens.size();) {
    const std::string_view status = tokens[i];
    const char letter = status.front();
    const bool two_paths = letter == 'R' || letter == 'C';
    if (i + (two_paths ? 2 : 1) >= tokens.size()) {
      throw GitReadError("malformed git log record: truncated name-status");
    }
    if (two_paths) {
      const std::string old_path(tokens[i + 1]);
      const std::string new_path(tokens[i + 2]);
      if (matches_extension(new_path, extension)) {
        commit.changes.emplace_back(status_to_type(letter), new_path);
      } else if (matches_extension(old_path, extension)) {
        // A matching file renamed away from the filter is recorded as the
        // disappearance of the old path.
        commit.changes.emplace_back(ChangeType::Delete, old_path);
      }
      i += 3;
    } else {
      const std::string path(tokens[i + 1]);
      if (matches_extension(path, extension)) {
        commit.changes.emplace_back(status_to_type(letter), path);
      }
      i += 2;
    }
  }
  return commit;
}

}  // namespace

std::string_view to_string(ChangeType type) {
  switch (type) {
    case ChangeType::Add: return "add";
    case ChangeType::Modify: return "modify";
    case ChangeType::Rename: return "rename";
    case ChangeType::Delete: return "delete";
  }
  return "unknown";
}

bool matches_extension(std::string_view path, std::string_view extension) {
  if (extension.empty() || path.size() < extension.size()) return false;
  const std::string_view tail = path.substr(path.size() - extension.size());
  return std::equal(tail.begin(), tail.end(), extension.begin(),
                    [](unsigned char a, unsigned char b) {
                      return std::tolower(a) == std::tolower(b);
                    });
}

ExtractionResult extract_history(const ExtractionConfig& config) {
  if (config.extension.empty()) {
    throw std::invalid_argument("extension filter must be non-empty");
  }
  if (!std::filesystem::exists(config.repo)) {
    throw RepoNotFoundError("repository path does not exist: " +
                            config.repo.string());
  }

  const auto probe = run_git(config.repo, {"rev-parse", "--git-dir"});
  if (probe.exit_code != 0) {
    throw NotAGitRepositoryError("not a git repository: " +
                                 config.repo.string() + " (" +
                                 first_line(probe.err) + ")");
  }

  ExtractionResult result;

  // An empty repository has no HEAD and no history.
  const auto head = run_git(config.repo, {"rev-parse", "--verify", "HEAD"});
  if (head.exit_code != 0) {
    log_info("repository has no commits: " + config.repo.string());
    return result;
  }

  const auto log = run_git(
      config.repo,
      {"-c", "log.showSignature=false", "log", "--first-parent",
       "--diff-merges=first-parent", "-M", "--name-status", "-z",
       std::string("--pretty=format:") + kRecordMark + "%H" + kFieldSep +
           "%ct" + kFieldSep + "%s" + kHeaderEnd});
  if (log.exit_code != 0) {
    throw GitReadError("git log failed (exit " +
                       std::to_string(log.exit_code) + "): " +
                       first_line(log.err));
  }

  std::vector<RawCommit> commits;
  const std::string& stream = log.out;
  std::size_t pos = 0;
  while (pos < stream.size()) {
    if (stream[pos] != kRecordMark) {
      ++pos;
      continue;
    }
    auto next = stream.find(kRecordMark, pos + 1);
    if (next == std::string::npos) next = stream.size();
    commits.push_back(parse_commit(
        std::string_view(stream).substr(pos + 1, next - pos - 1),
        config.extension));
    pos = next;
  }

  for (const RawCommit& commit : commits) {
    if (config.since && commit.date < *config.since) continue;
    if (config.until && commit.date > *config.until) continue;
    for (const auto& [type, path] : commit.changes) {
      ChangeRecord record;
      record.change_id = commit.hash;
      record.log = commit.subject;
      record.date = commit.date;
      record.change_type = type;
      record.file = path;
      result.records.push_back(std::move(record));
    }
  }

  std::sort(result.records.begin(), result.records.end(),
            [](const ChangeRecord& a, const ChangeRecord& b) {
              if (a.date != b.date) return a.date < b.date;
              if (a.change_id != b.change_id) return a.change_id < b.change_id;
              return a.file < b.file;
            });
  for (ChangeRecord& record : result.records) {
    record.file_index = result.interner.intern(record.file);
  }
  return result;
}

TransactionDatabase to_transactions(const std::vector<ChangeRecord>& records) {
  std::vector<RawTransaction> raw;
  for (const ChangeRecord& record : records) {
    if (raw.empty() || raw.back().id != record.change_id) {
      raw.push_back(RawTransaction{record.change_id, record.date, {}});
    }
    raw.back().files.push_back(record.file);
  }
  return TransactionDatabase::build(std::move(raw));
}

void write_records_csv(std::ostream& out,
                       const std::vector<ChangeRecord>& records) {
  out << "change_id,date,change_type,file\n";
  for (const ChangeRecord& record : records) {
    out << csv_line({csv_field(record.change_id),
                     csv_field(format_timestamp(record.date)),
                     std::string(to_string(record.change_type)),
                     csv_field(record.file)})
        << '\n';
  }
}

}  // namespace cochange
