#include "cochange/time_utils.hpp"

#include <chrono>
#include <cstdio>

namespace cochange {

namespace {

using std::chrono::days;
using std::chrono::seconds;
using std::chrono::sys_days;
using std::chrono::sys_seconds;
using std::chrono::year_month_day;
using std::chrono::year_month_day_last;

}  // namespace

std::string format_timestamp(std::int64_t epoch_seconds) {
  const sys_seconds tp{seconds{epoch_seconds}};
  const auto day_point = std::chrono::floor<days>(tp);
  const year_month_day ymd{day_point};
  const auto tod = (tp - day_point).count();
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<long long>(tod / 3600),
                static_cast<long long>(tod / 60 % 60),
                static_cast<long long>(tod % 60));
  return buf;
}

std::optional<std::int64_t> parse_timestamp(std::string_view text) {
  if (text.size() != 20) return std::nullopt;
  int y = 0;
  unsigned mo = 0, d = 0, h = 0, mi = 0, s = 0;
  char t = 0, z = 0;
  const std::string owned(text);
  if (std::sscanf(owned.c_str(), "%4d-%2u-%2u%c%2u:%2u:%2u%c", &y, &mo, &d, &t,
                  &h, &mi, &s, &z) != 8) {
    return std::nullopt;
  }
  if (t != 'T' || z != 'Z') return std::nullopt;
  const year_month_day ymd{std::chrono::year{y}, std::chrono::month{mo},
                           std::chrono::day{d}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) return std::nullopt;
  const sys_days day_point{ymd};
  return std::chrono::duration_cast<seconds>(day_point.time_since_epoch())
             .count() +
         static_cast<std::int64_t>(h) * 3600 + mi * 60 + s;
}

std::int64_t month_floor(std::int64_t epoch_seconds) {
  const sys_seconds tp{seconds{epoch_seconds}};
  const year_month_day ymd{std::chrono::floor<days>(tp)};
  const sys_days first{
      year_month_day{ymd.year(), ymd.month(), std::chrono::day{1}}};
  return std::chrono::duration_cast<seconds>(first.time_since_epoch()).count();
}

std::int64_t one_year_before(std::int64_t epoch_seconds) {
  const sys_seconds tp{seconds{epoch_seconds}};
  const auto day_point = std::chrono::floor<days>(tp);
  const year_month_day ymd{day_point};
  const auto tod = tp - day_point;
  year_month_day shifted{ymd.year() - std::chrono::years{1}, ymd.month(),
                         ymd.day()};
  if (!shifted.ok()) {
    shifted = year_month_day{
        year_month_day_last{shifted.year(),
                            std::chrono::month_day_last{shifted.month()}}};
  }
  const sys_days shifted_day{shifted};
  return std::chrono::duration_cast<seconds>(
             shifted_day.time_since_epoch() + tod)
      .count();
}

}  // namespace cochange
