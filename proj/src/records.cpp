#include "critbase/records.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace critbase {

Format format_from_string(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + s + "'");
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round_to_15(double x) { return std::strtod(format_double(x).c_str(), nullptr); }

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string to_text(const FieldValue& v) {
  if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
  if (std::holds_alternative<double>(v)) return format_double(std::get<double>(v));
  return std::to_string(std::get<long long>(v));
}

void emit_text(const std::vector<Record>& records, std::ostream& out) {
  bool first = true;
  for (const auto& r : records) {
    if (!first) out << "\n";
    first = false;
    for (const auto& [k, v] : r.fields) out << k << " = " << to_text(v) << "\n";
  }
}

void emit_csv(const std::vector<Record>& records, std::ostream& out) {
  if (records.empty()) return;
  const auto& head = records.front().fields;
  for (size_t i = 0; i < head.size(); ++i)
    out << (i ? "," : "") << csv_escape(head[i].first);
  out << "\n";
  for (const auto& r : records) {
    if (r.fields.size() != head.size())
      throw std::logic_error("csv emission needs a uniform record schema");
    for (size_t i = 0; i < r.fields.size(); ++i) {
      if (r.fields[i].first != head[i].first)
        throw std::logic_error("csv emission needs a uniform record schema");
      out << (i ? "," : "") << csv_escape(to_text(r.fields[i].second));
    }
    out << "\n";
  }
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.fields) {
    if (std::holds_alternative<std::string>(v)) j[k] = std::get<std::string>(v);
    else if (std::holds_alternative<double>(v)) j[k] = round_to_15(std::get<double>(v));
    else j[k] = std::get<long long>(v);
  }
  return j;
}

void emit_json(const std::vector<Record>& records, std::ostream& out) {
  if (records.size() == 1) {
    out << to_json(records.front()).dump(2) << "\n";
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  out << arr.dump(2) << "\n";
}

}  // namespace

void emit(const std::vector<Record>& records, Format f, std::ostream& out) {
  switch (f) {
    case Format::text: emit_text(records, out); return;
    case Format::csv: emit_csv(records, out); return;
    case Format::json: emit_json(records, out); return;
  }
}

std::string error_record(const std::string& error, const std::string& detail) {
  nlohmann::ordered_json j;
  j["error"] = error;
  j["detail"] = detail;
  return j.dump() + "\n";
}

}  // namespace critbase
