#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cochange/transaction.hpp"

namespace cochange {

/// Transaction index within the owning database (0-based).
using Tid = std::uint32_t;

/// Vertical layout: one strictly ascending tidset per item. TID t appears in
/// tidsets[i] iff item i appears in transaction t of the source database.
struct VerticalDatabase {
  std::vector<std::vector<Tid>> tidsets;
  std::size_t transaction_count = 0;
};

/// Single pass over the database.
VerticalDatabase to_vertical(const TransactionDatabase& db);

/// Intersection of two ascending tidsets; result ascending.
std::vector<Tid> tidset_intersect(std::span<const Tid> a,
                                  std::span<const Tid> b);

}  // namespace cochange
