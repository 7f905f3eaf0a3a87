#include "cutplane/config.hpp"

#include <fstream>
#include <sstream>

#include "cutplane/errors.hpp"
#include "cutplane/numfmt.hpp"

namespace cutplane {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ConfigMap parse_config(std::istream& in) {
  ConfigMap out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value, got '" + t + "'", line_no);
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_no);
    if (out.count(key)) throw ParseError("duplicate key '" + key + "'", line_no);
    out[key] = value;
  }
  return out;
}

ConfigMap parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetUnavailable(path);
  return parse_config(in);
}

std::string config_hash(const ConfigMap& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [key, value] : config) {
    feed(key);
    feed("=");
    feed(value);
    feed("\n");
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::vector<std::string> parse_string_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  for (const auto& item : parse_string_list(csv))
    out.push_back(parse_double_strict(item));
  return out;
}

std::vector<long long> parse_int_list(const std::string& csv) {
  std::vector<long long> out;
  for (const auto& item : parse_string_list(csv)) {
    double v = parse_double_strict(item);
    auto i = static_cast<long long>(v);
    if (static_cast<double>(i) != v)
      throw ParseError("expected integer, got '" + item + "'");
    out.push_back(i);
  }
  return out;
}

}  // namespace cutplane
