#include "pseudoatom/csv.hpp"

#include "pseudoatom/errors.hpp"

namespace pseudoatom::csv {

std::string escape(std::string_view field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<Record> parse(std::istream& in) {
  std::vector<Record> records;
  std::string field;
  Record current;
  int line = 1, column = 0;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_started = false;

  auto end_field = [&]() {
    current.fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&]() {
    if (record_started) {
      end_field();
      records.push_back(std::move(current));
      current = Record{};
    }
    record_started = false;
  };

  char c;
  while (in.get(c)) {
    ++column;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          ++column;
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') {
          ++line;
          column = 0;
        }
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted)
          throw ParseError("quote inside unquoted field", line, column);
        if (!record_started) {
          current.line = line;
          record_started = true;
        }
        in_quotes = true;
        field_was_quoted = true;
        break;
      case ',':
        if (!record_started) {
          current.line = line;
          record_started = true;
        }
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        column = 0;
        break;
      case '#':
        if (!record_started && field.empty()) {
          // comment: consume to end of line
          while (in.get(c) && c != '\n') {
          }
          ++line;
          column = 0;
          break;
        }
        [[fallthrough]];
      default:
        if (!record_started) {
          current.line = line;
          record_started = true;
        }
        field.push_back(c);
        break;
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted field", line, column);
  end_record();
  return records;
}

}  // namespace pseudoatom::csv
