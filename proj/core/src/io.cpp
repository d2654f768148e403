#include "effhull/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace effhull {

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

double parse_double(const std::string& token, const std::string& where) {
  errno = 0;
  const char* begin = token.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  while (end && *end != '\0' && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
  if (end == begin || (end && *end != '\0') || errno == ERANGE) {
    throw ParseError("cannot parse number '" + token + "' at " + where);
  }
  return v;
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& text, const std::string& path) {
  std::vector<std::vector<double>> rows;
  std::istringstream stream(text);
  std::string line;
  int lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    int col = 0;
    while (std::getline(cells, cell, ',')) {
      ++col;
      cell.erase(0, cell.find_first_not_of(" \t"));
      row.push_back(parse_double(cell, path + ":" + std::to_string(lineno) + ":" + std::to_string(col)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> parse_json_matrix(const std::string& text, const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) {
    throw ParseError(path + ": expected an object with fields 'n' and 'rows'");
  }
  if (!doc["n"].is_number_integer() || !doc["rows"].is_array()) {
    throw ParseError(path + ": 'n' must be an integer and 'rows' an array");
  }
  const auto n = doc["n"].get<long long>();
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw ParseError(path + ": each row must be an array");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError(path + ": matrix entries must be numbers");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  if (static_cast<long long>(rows.size()) != n) {
    throw ParseError(path + ": 'n' does not match the number of rows");
  }
  return rows;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw ParseError("failed while writing file: " + path);
}

std::vector<std::vector<double>> read_raw_matrix(const std::string& path) {
  std::string text = read_text_file(path);
  if (has_suffix(path, ".json")) return parse_json_matrix(text, path);
  return parse_csv_rows(text, path);
}

ReciprocalMatrix read_matrix(const std::string& path, const ToleranceConfig& cfg) {
  return validate_reciprocal(read_raw_matrix(path), cfg);
}

std::vector<double> read_numbers(const std::string& path) {
  std::vector<double> out;
  for (const auto& row : parse_csv_rows(read_text_file(path), path)) {
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

PositiveVector read_positive_vector(const std::string& path) {
  return PositiveVector(read_numbers(path));
}

WeightVector read_weight_vector(const std::string& path) {
  return WeightVector(read_numbers(path));
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

double round12(double v) {
  return std::strtod(format_number(v).c_str(), nullptr);
}

std::string vector_csv(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_number(v[i]);
  }
  return out;
}

std::string matrix_csv(const ReciprocalMatrix& A) {
  std::string out;
  const int n = A.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ",";
      out += format_number(A(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string matrix_json(const ReciprocalMatrix& A) {
  nlohmann::ordered_json doc;
  const int n = A.size();
  doc["n"] = n;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < n; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < n; ++j) row.push_back(round12(A(i, j)));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

}  // namespace effhull
