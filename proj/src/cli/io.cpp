#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairkit/cli.hpp"

namespace fairkit::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading input file: " + path);
  return std::move(buf).str();
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

bool parse_double(const std::string& token, double& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end && !token.empty();
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return fields;
}

bool looks_like_json(const std::string& text) {
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

struct CsvColumns {
  std::vector<std::string> ids;  // empty when the file has one column
  std::vector<double> values;
};

// Optional header, then one value column, optionally preceded by a user
// id column. The value header name differentiates allocation files from
// demand files.
CsvColumns read_csv_columns(const std::string& path, const std::string& text,
                            const std::vector<std::string>& value_names) {
  CsvColumns out;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  int columns = 0;  // unknown until the first data row
  bool saw_header = false;
  bool first_content_line = true;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_csv_row(line);
    if (first_content_line) {
      first_content_line = false;
      // Data rows always carry a numeric value column; a non-numeric last
      // field marks the row as a header.
      double ignored = 0.0;
      if (!parse_double(fields.back(), ignored)) {
        saw_header = true;
        const auto name = lower(fields.back());
        const bool known_value =
            std::find(value_names.begin(), value_names.end(), name) !=
            value_names.end();
        if (fields.size() == 1 && known_value) {
          columns = 1;
          continue;
        }
        if (fields.size() == 2 && lower(fields[0]) == "user" && known_value) {
          columns = 2;
          continue;
        }
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": unrecognized header; expected \"" +
                         value_names.front() + "\" or \"user," +
                         value_names.front() + "\"");
      }
    }
    if (columns == 0) {
      if (fields.size() != 1 && fields.size() != 2) {
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": expected one or two columns, found " +
                         std::to_string(fields.size()));
      }
      columns = static_cast<int>(fields.size());
    }
    if (static_cast<int>(fields.size()) != columns) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(columns) + " column(s), found " +
                       std::to_string(fields.size()));
    }
    double value = 0.0;
    if (!parse_double(fields.back(), value)) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": value \"" + fields.back() + "\" is not a number");
    }
    if (columns == 2) out.ids.push_back(fields[0]);
    out.values.push_back(value);
  }
  if (out.values.empty()) {
    throw ParseError(path + ": no data rows" +
                     (saw_header ? " after the header" : ""));
  }
  return out;
}

nlohmann::json parse_json(const std::string& path, const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<double> numeric_array(const std::string& path,
                                  const nlohmann::json& doc,
                                  const char* field) {
  if (!doc.is_object() || !doc.contains(field)) {
    throw ParseError(path + ": missing required field \"" +
                     std::string(field) + "\"");
  }
  const auto& arr = doc[field];
  if (!arr.is_array()) {
    throw ParseError(path + ": field \"" + std::string(field) +
                     "\" must be an array of numbers");
  }
  std::vector<double> values;
  values.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) {
      throw ParseError(path + ": field \"" + std::string(field) +
                       "\" must contain numbers only");
    }
    values.push_back(v.get<double>());
  }
  return values;
}

std::vector<std::string> default_ids(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

}  // namespace

AllocationInput read_allocation_file(const std::string& path) {
  const auto text = read_file(path);
  AllocationInput input;
  input.metric = "allocation";
  if (looks_like_json(text)) {
    const auto doc = parse_json(path, text);
    input.values = numeric_array(path, doc, "allocations");
    if (doc.contains("metric")) {
      if (!doc["metric"].is_string()) {
        throw ParseError(path + ": field \"metric\" must be a string");
      }
      input.metric = doc["metric"].get<std::string>();
    }
    input.ids = default_ids(input.values.size());
    return input;
  }
  auto cols = read_csv_columns(path, text, {"allocation"});
  input.values = std::move(cols.values);
  input.ids = cols.ids.empty() ? default_ids(input.values.size())
                               : std::move(cols.ids);
  return input;
}

std::vector<double> read_demands_file(const std::string& path) {
  const auto text = read_file(path);
  if (looks_like_json(text)) {
    const auto doc = parse_json(path, text);
    return numeric_array(path, doc, "demands");
  }
  return read_csv_columns(path, text, {"demand", "demands"}).values;
}

}  // namespace fairkit::cli
