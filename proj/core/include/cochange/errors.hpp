#pragma once

#include <stdexcept>
#include <string>

namespace cochange {

/// Base class for recoverable toolkit errors. The CLI maps these to exit
/// status 1 (user / input errors), anything else to status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RepoNotFoundError : public Error {
 public:
  using Error::Error;
};

class NotAGitRepositoryError : public Error {
 public:
  using Error::Error;
};

/// Failure of the underlying git invocation; carries the tool's diagnostics.
class GitReadError : public Error {
 public:
  using Error::Error;
};

/// Malformed interchange file; the message names the offending line.
class FormatError : public Error {
 public:
  using Error::Error;
};

class EmptySplitError : public Error {
 public:
  using Error::Error;
};

class NotInTrainingSetError : public Error {
 public:
  using Error::Error;
};

class NoEvaluableQueriesError : public Error {
 public:
  using Error::Error;
};

class MisalignedSamplesError : public Error {
 public:
  using Error::Error;
};

/// Guard on the brute-force miner: it enumerates every subset of every
/// transaction and is only meant for small instances.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

/// A frequent itemset's subset is missing from a miner's output. This is an
/// internal consistency failure (a broken miner), not a user error.
class MissingSubsetError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cochange
