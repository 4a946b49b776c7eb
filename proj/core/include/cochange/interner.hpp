#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cochange {

/// Dense handle for an interned file path. Ids are assigned in first-seen
/// order starting at 0.
using ItemId = std::uint32_t;

class Interner {
 public:
  /// Returns the existing id for `path` or assigns the next dense id.
  ItemId intern(std::string path);

  std::optional<ItemId> find(std::string_view path) const;

  /// Precondition: id < size().
  const std::string& resolve(ItemId id) const { return paths_[id]; }

  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }

  const std::vector<std::string>& paths() const { return paths_; }

  friend bool operator==(const Interner& a, const Interner& b) {
    return a.paths_ == b.paths_;
  }

 private:
  std::unordered_map<std::string, ItemId> index_;
  std::vector<std::string> paths_;
};

/// Interns every path in order; duplicates map to the same id.
std::pair<Interner, std::vector<ItemId>> intern_paths(
    const std::vector<std::string>& paths);

}  // namespace cochange
