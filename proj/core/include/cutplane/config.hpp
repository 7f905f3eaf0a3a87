#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cutplane {

// Flat key=value configuration. Keys are unique; insertion into the ordered
// map gives a canonical serialization for hashing.
using ConfigMap = std::map<std::string, std::string>;

// Grammar: one `key = value` per line, '#' starts a comment, blank lines
// ignored. See docs/formats.md.
ConfigMap parse_config(std::istream& in);
ConfigMap parse_config_file(const std::string& path);

// FNV-1a over the canonical "key=value\n" serialization, as 16 hex digits.
// Every CSV row carries this value so outputs are traceable to their exact
// effective configuration.
std::string config_hash(const ConfigMap& config);

std::vector<double> parse_double_list(const std::string& csv);
std::vector<long long> parse_int_list(const std::string& csv);
std::vector<std::string> parse_string_list(const std::string& csv);

}  // namespace cutplane
