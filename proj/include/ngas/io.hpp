#pragma once

// Deterministic serialization of result documents.  Numbers are written with
// 10 significant digits, so re-parsing and re-emitting reproduces the bytes.

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <vector>

#include "ngas/error.hpp"
#include "ngas/model.hpp"

namespace ngas::io {

using Json = nlohmann::ordered_json;

struct Document {
  Json meta = Json::object();
  std::vector<Json> records;
};

inline std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";  // no "-0": it would re-parse as the integer 0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace detail {

inline void write_scalar(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      break;
    default:
      out += j.dump();  // integers, booleans, null and escaped strings
  }
}

inline void write_compact(const Json& j, std::string& out) {
  if (j.is_object()) {
    out += '{';
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ", ";
      first = false;
      out += Json(key).dump();
      out += ": ";
      write_compact(value, out);
    }
    out += '}';
  } else if (j.is_array()) {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      write_compact(j[i], out);
    }
    out += ']';
  } else {
    write_scalar(j, out);
  }
}

}  // namespace detail

// {"meta": {...}, "records": [ one record per line ]}
inline std::string to_json(const Document& doc) {
  std::string out = "{\n  \"meta\": ";
  detail::write_compact(doc.meta, out);
  out += ",\n  \"records\": [";
  for (std::size_t i = 0; i < doc.records.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    detail::write_compact(doc.records[i], out);
  }
  out += doc.records.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline Document parse_json(const std::string& text) {
  const Json j = Json::parse(text);
  Document doc;
  doc.meta = j.at("meta");
  for (const Json& r : j.at("records")) doc.records.push_back(r);
  return doc;
}

namespace detail {

inline void flatten(const std::string& prefix, const Json& j, std::vector<std::pair<std::string, Json>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(prefix.empty() ? key : prefix + "_" + key, value, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(prefix + "_" + std::to_string(i + 1), j[i], out);
  } else {
    out.emplace_back(prefix, j);
  }
}

inline std::string csv_field(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  }
  std::string out;
  write_scalar(j, out);
  return out == "null" ? "" : out;
}

}  // namespace detail

// Header row from the union of flattened keys in first-seen order; arrays
// become key_1..key_m.  Missing cells are left empty.
inline std::string to_csv(const Document& doc) {
  std::vector<std::vector<std::pair<std::string, Json>>> rows;
  std::vector<std::string> columns;
  for (const Json& r : doc.records) {
    rows.emplace_back();
    detail::flatten("", r, rows.back());
    for (const auto& [key, value] : rows.back())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  }
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      for (const auto& [key, value] : row)
        if (key == columns[c]) {
          out += detail::csv_field(value);
          break;
        }
    }
    out += '\n';
  }
  return out;
}

// Writes through a sibling temporary and renames, so a failed run never
// leaves a partial file behind.
inline void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ngas::detail::concat("cannot open ", tmp.string(), " for writing"));
    os << content;
    os.flush();
    if (!os) {
      os.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ngas::detail::concat("failed writing ", tmp.string()));
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ngas::detail::concat("cannot move output into place at ", path.string()));
  }
}

}  // namespace ngas::io
