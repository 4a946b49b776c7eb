#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cochange {

/// Fixed-point rendering with exactly 6 fractional digits. Ties round to
/// even per IEEE-754 nearest rounding.
std::string fixed6(double value);

/// RFC-4180 field quoting: fields containing commas, quotes, CR or LF are
/// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(std::string_view value);

/// Joins pre-rendered fields into one CSV line (no trailing newline).
std::string csv_line(const std::vector<std::string>& fields);

/// Full RFC-4180 reader; quoted fields may span lines. Returns one record
/// per row. A trailing newline does not produce an empty record.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

}  // namespace cochange
