#include "catkit/sweep.hpp"

#include <cstdio>
#include <set>
#include <stdexcept>

namespace catkit {

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SweepResult::SweepResult(std::vector<std::string> columns) : columns_(std::move(columns)) {
  std::set<std::string> seen(columns_.begin(), columns_.end());
  if (seen.size() != columns_.size())
    throw std::invalid_argument("SweepResult: column names must be unique");
  if (columns_.empty()) throw std::invalid_argument("SweepResult: no columns");
}

void SweepResult::add_row(std::vector<double> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("SweepResult: row width does not match columns");
  rows_.push_back(std::move(row));
}

void SweepResult::add_metadata(const std::string& key, const std::string& value) {
  metadata_.emplace_back(key, value);
}

std::string SweepResult::body_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_full(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string SweepResult::to_csv() const {
  std::string out;
  for (const auto& [k, v] : metadata_) out += "# " + k + ": " + v + "\n";
  return out + body_csv();
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string SweepResult::to_json() const {
  std::string out = "{\n  \"metadata\": {";
  for (std::size_t i = 0; i < metadata_.size(); ++i) {
    out += (i ? ", " : "");
    out += "\"" + json_escape(metadata_[i].first) + "\": \"" +
           json_escape(metadata_[i].second) + "\"";
  }
  out += "},\n  \"columns\": [";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    out += (i ? ", " : "");
    out += "\"" + json_escape(columns_[i]) + "\"";
  }
  out += "],\n  \"rows\": [\n";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out += "    [";
    for (std::size_t i = 0; i < rows_[r].size(); ++i) {
      out += (i ? ", " : "");
      out += "\"" + format_full(rows_[r][i]) + "\"";
    }
    out += r + 1 < rows_.size() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace catkit
