#include "cochange/interner.hpp"

namespace cochange {

ItemId Interner::intern(std::string path) {
  const auto it = index_.find(path);
  if (it != index_.end()) return it->second;
  const ItemId id = static_cast<ItemId>(paths_.size());
  index_.emplace(path, id);
  paths_.push_back(std::move(path));
  return id;
}

std::optional<ItemId> Interner::find(std::string_view path) const {
  const auto it = index_.find(std::string(path));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<Interner, std::vector<ItemId>> intern_paths(
    const std::vector<std::string>& paths) {
  Interner interner;
  std::vector<ItemId> ids;
  ids.reserve(paths.size());
  for (const auto& path : paths) ids.push_back(interner.intern(path));
  return {std::move(interner), std::move(ids)};
}

}  // namespace cochange
