#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cutplane {

// RFC-4180-style quoting: fields containing a comma, quote, or newline are
// wrapped in double quotes with embedded quotes doubled. Rows end with '\n'.
std::string csv_escape(const std::string& field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace cutplane
