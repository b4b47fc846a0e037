#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "isan/error.hpp"

namespace isan {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t begin = 0;
  while (true) {
    size_t pos = s.find(sep, begin);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(begin));
      break;
    }
    out.emplace_back(s.substr(begin, pos - begin));
    begin = pos + 1;
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string strip(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

struct TsvRow {
  int line_no;
  std::vector<std::string> fields;
};

// Reads TSV content: blank lines skipped, lines starting with '#' reported
// separately so loaders can interpret header directives.
struct TsvFile {
  std::vector<std::string> directives;
  std::vector<TsvRow> rows;
};

inline TsvFile read_tsv_stream(std::istream& in, const std::string& origin) {
  if (!in) raise(errc::io_error, "cannot read " + origin);
  TsvFile out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      out.directives.push_back(line);
      continue;
    }
    out.rows.push_back({n, split(line, '\t')});
  }
  return out;
}

inline TsvFile read_tsv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io_error, "cannot open " + path);
  return read_tsv_stream(in, path);
}

inline TsvFile read_tsv_string(const std::string& text) {
  std::istringstream in(text);
  return read_tsv_stream(in, "<string>");
}

}  // namespace isan
