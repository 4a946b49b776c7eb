#include "cochange/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace cochange {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* raw = std::getenv("COCHANGE_LOG");
    if (raw == nullptr) return LogLevel::error;
    const std::string value(raw);
    if (value == "debug") return LogLevel::debug;
    if (value == "info") return LogLevel::info;
    return LogLevel::error;
  }();
  return level;
}

namespace {

void emit(std::string_view tag, std::string_view message) {
  std::cerr << tag << message << '\n';
}

}  // namespace

void log_error(std::string_view message) { emit("error: ", message); }

void log_info(std::string_view message) {
  if (log_level() >= LogLevel::info) emit("info: ", message);
}

void log_debug(std::string_view message) {
  if (log_level() >= LogLevel::debug) emit("debug: ", message);
}

}  // namespace cochange
