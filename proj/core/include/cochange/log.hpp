#pragma once

#include <string_view>

namespace cochange {

// Verbosity is taken from the COCHANGE_LOG environment variable
// (error | info | debug); unset or unrecognized means error-only.
enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level();

void log_error(std::string_view message);
void log_info(std::string_view message);
void log_debug(std::string_view message);

}  // namespace cochange
