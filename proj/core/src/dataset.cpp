#include "cutplane/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "cutplane/errors.hpp"

namespace cutplane {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, std::size_t line_no) {
  std::string t = trim(field);
  if (t.empty()) throw ParseError("empty numeric field", line_no);
  const char* begin = t.c_str();
  if (*begin == '+') ++begin;  // from_chars rejects an explicit plus sign
  const char* end = t.c_str() + t.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("malformed number '" + field + "'", line_no);
  if (!std::isfinite(value))
    throw ParseError("non-finite number '" + field + "'", line_no);
  return value;
}

int parse_label(const std::string& field, std::size_t line_no) {
  double v = parse_double(field, line_no);
  if (v == 1.0) return 1;
  if (v == -1.0) return -1;
  throw ParseError("label must be -1 or +1, got '" + field + "'", line_no);
}

}  // namespace

void add_point(Dataset& dataset, Vec x, int y) {
  if (y != 1 && y != -1)
    throw ParseError("label must be -1 or +1, got " + std::to_string(y));
  if (!all_finite(x)) throw ParseError("non-finite coordinate in point");
  if (is_zero(x)) throw ZeroVector("dataset point");
  if (dataset.points.empty() && dataset.dim == 0) dataset.dim = x.size();
  if (x.size() != dataset.dim) throw DimensionMismatch(dataset.dim, x.size());
  dataset.points.push_back({std::move(x), y});
}

Vec signed_point(const LabeledPoint& p) {
  return p.y > 0 ? p.x : scaled(p.x, -1.0);
}

Dataset load_dense_csv(std::istream& in) {
  Dataset out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!t.empty() && t.back() == ',') fields.push_back("");
    if (fields.size() < 2)
      throw ParseError("need at least one feature and a label", line_no);
    Vec x(fields.size() - 1);
    for (std::size_t i = 0; i + 1 < fields.size(); ++i)
      x[i] = parse_double(fields[i], line_no);
    int y = parse_label(fields.back(), line_no);
    if (is_zero(x)) throw ZeroVector("line " + std::to_string(line_no));
    if (out.dim != 0 && x.size() != out.dim)
      throw ParseError("row has " + std::to_string(x.size()) +
                           " features, expected " + std::to_string(out.dim),
                       line_no);
    add_point(out, std::move(x), y);
  }
  if (out.empty()) throw EmptyDataset();
  return out;
}

Dataset load_dense_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetUnavailable(path);
  return load_dense_csv(in);
}

Dataset load_sparse(std::istream& in, std::size_t dim) {
  struct Row {
    int y;
    std::vector<std::pair<std::size_t, double>> entries;
    std::size_t line_no;
  };
  std::vector<Row> rows;
  std::size_t max_index = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    std::stringstream ss(t);
    std::string tok;
    if (!(ss >> tok)) continue;
    Row row;
    row.y = parse_label(tok, line_no);
    row.line_no = line_no;
    std::size_t prev_index = 0;
    while (ss >> tok) {
      std::size_t colon = tok.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
        throw ParseError("malformed index:value pair '" + tok + "'", line_no);
      double idx_raw = parse_double(tok.substr(0, colon), line_no);
      auto idx = static_cast<std::size_t>(idx_raw);
      if (idx_raw != static_cast<double>(idx) || idx < 1)
        throw ParseError("index must be a positive integer in '" + tok + "'",
                         line_no);
      if (idx <= prev_index)
        throw ParseError("indices must be strictly increasing at '" + tok + "'",
                         line_no);
      prev_index = idx;
      double value = parse_double(tok.substr(colon + 1), line_no);
      row.entries.emplace_back(idx, value);
      max_index = std::max(max_index, idx);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw EmptyDataset();
  std::size_t d = dim == 0 ? max_index : dim;
  if (d == 0) throw ParseError("no feature index seen and no dimension given");
  if (max_index > d)
    throw ParseError("feature index " + std::to_string(max_index) +
                     " exceeds requested dimension " + std::to_string(d));
  Dataset out;
  out.dim = d;
  for (const auto& row : rows) {
    Vec x(d, 0.0);
    for (const auto& [idx, value] : row.entries) x[idx - 1] = value;
    if (is_zero(x))
      throw ZeroVector("line " + std::to_string(row.line_no));
    add_point(out, std::move(x), row.y);
  }
  return out;
}

Dataset load_sparse_file(const std::string& path, std::size_t dim) {
  std::ifstream in(path);
  if (!in) throw DatasetUnavailable(path);
  return load_sparse(in, dim);
}

Pool to_pool(const Dataset& dataset) {
  Pool pool;
  pool.dim = dataset.dim;
  pool.points.reserve(dataset.size());
  for (const auto& p : dataset.points) pool.points.push_back(p.x);
  return pool;
}

}  // namespace cutplane
