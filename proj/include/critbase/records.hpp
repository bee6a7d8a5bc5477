#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace critbase {

using FieldValue = std::variant<std::string, double, long long>;

struct Record {
  std::vector<std::pair<std::string, FieldValue>> fields;

  Record& add(std::string key, std::string v) {
    fields.emplace_back(std::move(key), std::move(v));
    return *this;
  }
  Record& add(std::string key, const char* v) { return add(std::move(key), std::string(v)); }
  Record& add(std::string key, double v) {
    fields.emplace_back(std::move(key), v);
    return *this;
  }
  Record& add(std::string key, long long v) {
    fields.emplace_back(std::move(key), v);
    return *this;
  }
  Record& add(std::string key, size_t v) { return add(std::move(key), static_cast<long long>(v)); }
  Record& add(std::string key, int v) { return add(std::move(key), static_cast<long long>(v)); }
};

enum class Format { text, csv, json };

Format format_from_string(const std::string& s);

// 15 significant digits; the same rounded value goes into every format.
std::string format_double(double x);
double round_to_15(double x);

void emit(const std::vector<Record>& records, Format f, std::ostream& out);

// {error, detail} object, printed on domain errors regardless of --format.
std::string error_record(const std::string& error, const std::string& detail);

}  // namespace critbase
