#include "cochange/transactions_io.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "cochange/errors.hpp"
#include "cochange/time_utils.hpp"

namespace cochange {

namespace {

void append_json_string(std::string& out, std::string_view value) {
  out.push_back('"');
  for (unsigned char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

[[noreturn]] void bad_line(std::string_view source, std::size_t line,
                           std::string_view reason) {
  throw FormatError(std::string(source) + ":" + std::to_string(line) + ": " +
                    std::string(reason));
}

}  // namespace

void write_transactions(std::ostream& out, const TransactionDatabase& db) {
  std::string line;
  for (std::size_t i = 0; i < db.size(); ++i) {
    const Transaction& txn = db.transactions()[i];
    line.clear();
    line += "{\"id\": ";
    append_json_string(line, txn.id);
    line += ", \"ts\": ";
    append_json_string(line, format_timestamp(txn.timestamp));
    line += ", \"files\": [";
    const auto files = db.files_of(i);
    for (std::size_t f = 0; f < files.size(); ++f) {
      if (f > 0) line += ", ";
      append_json_string(line, files[f]);
    }
    line += "]}";
    out << line << '\n';
  }
}

void write_transactions(const std::filesystem::path& path,
                        const TransactionDatabase& db) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path.string());
  write_transactions(out, db);
  if (!out) throw Error("write failed: " + path.string());
}

TransactionDatabase read_transactions(std::istream& in,
                                      std::string_view source_name) {
  std::vector<RawTransaction> raw;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;

    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      bad_line(source_name, line_number, "not valid JSON");
    }
    if (!parsed.is_object()) bad_line(source_name, line_number, "not a JSON object");
    if (!parsed.contains("id") || !parsed["id"].is_string()) {
      bad_line(source_name, line_number, "missing string field \"id\"");
    }
    if (!parsed.contains("ts") || !parsed["ts"].is_string()) {
      bad_line(source_name, line_number, "missing string field \"ts\"");
    }
    if (!parsed.contains("files") || !parsed["files"].is_array()) {
      bad_line(source_name, line_number, "missing array field \"files\"");
    }

    RawTransaction txn;
    txn.id = parsed["id"].get<std::string>();
    const auto ts = parse_timestamp(parsed["ts"].get<std::string>());
    if (!ts) bad_line(source_name, line_number, "malformed \"ts\" timestamp");
    txn.timestamp = *ts;

    std::string previous;
    bool first = true;
    for (const auto& element : parsed["files"]) {
      if (!element.is_string()) {
        bad_line(source_name, line_number, "non-string entry in \"files\"");
      }
      std::string file = element.get<std::string>();
      if (!first && !(previous < file)) {
        bad_line(source_name, line_number,
                 "\"files\" must be sorted and unique");
      }
      previous = file;
      first = false;
      txn.files.push_back(std::move(file));
    }
    raw.push_back(std::move(txn));
  }
  return TransactionDatabase::build(std::move(raw));
}

TransactionDatabase read_transactions(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path.string());
  return read_transactions(in, path.string());
}

}  // namespace cochange
