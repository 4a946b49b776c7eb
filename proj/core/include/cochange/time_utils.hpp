#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cochange {

/// UTC timestamps at second precision, stored as seconds since the Unix epoch.

/// Renders `YYYY-MM-DDThh:mm:ssZ`.
std::string format_timestamp(std::int64_t epoch_seconds);

/// Parses `YYYY-MM-DDThh:mm:ssZ`; rejects anything else.
std::optional<std::int64_t> parse_timestamp(std::string_view text);

/// First instant of the month containing `epoch_seconds`.
std::int64_t month_floor(std::int64_t epoch_seconds);

/// Same civil date and time one calendar year earlier (Feb 29 clamps to the
/// last day of February).
std::int64_t one_year_before(std::int64_t epoch_seconds);

}  // namespace cochange
