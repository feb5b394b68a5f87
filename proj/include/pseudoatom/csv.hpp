#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace pseudoatom::csv {

// RFC-4180-style quoting: fields containing commas, quotes or newlines are
// quoted, embedded quotes doubled.
std::string escape(std::string_view field);

struct Record {
  std::vector<std::string> fields;
  int line = 0;  // 1-based line where the record starts
};

// Parses comma-separated records with quoted-field support. Lines starting
// with '#' (outside quotes) are comments and skipped, as are blank lines.
// Throws ParseError with line/column for unterminated or misplaced quotes.
std::vector<Record> parse(std::istream& in);

}  // namespace pseudoatom::csv
