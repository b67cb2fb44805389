#include "ugat/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ugat/errors.hpp"

namespace ugat {
namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (true) {
    std::size_t comma = line.find(',', begin);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, comma - begin));
    begin = comma + 1;
  }
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line_no << ": " << what;
  throw CsvFormatError(msg.str());
}

std::int64_t parse_count(const std::string& field, std::size_t line_no) {
  if (field.empty()) fail(line_no, "empty field");
  std::int64_t value = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(line_no, "'" + field + "' is not a nonnegative integer");
  }
  if (value < 0) fail(line_no, "negative count " + field);
  return value;
}

}  // namespace

Dataset parse_count_csv(std::istream& in, const std::string& label) {
  std::string line;
  if (!std::getline(in, line)) throw CsvFormatError("empty input");
  std::vector<std::string> header = split_fields(strip_cr(line));
  for (std::size_t j = 0; j < header.size(); ++j) {
    std::string want = "x" + std::to_string(j + 1);
    if (header[j] != want) {
      fail(1, "expected header field '" + want + "', got '" + header[j] + "'");
    }
  }
  const std::size_t r = header.size();

  Dataset d;
  d.label = label;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != r) {
      std::ostringstream msg;
      msg << "expected " << r << " fields, got " << fields.size();
      fail(line_no, msg.str());
    }
    CountVector row(r);
    for (std::size_t j = 0; j < r; ++j) {
      row[j] = parse_count(fields[j], line_no);
    }
    d.rows.push_back(std::move(row));
  }
  if (d.rows.empty()) throw CsvFormatError("no data rows after the header");
  return d;
}

Dataset load_count_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return parse_count_csv(in, path);
}

void format_count_csv(std::ostream& out, const std::vector<CountVector>& rows) {
  if (rows.empty()) throw DegenerateData("no rows to write");
  const std::size_t r = rows.front().size();
  for (std::size_t j = 0; j < r; ++j) {
    if (j) out << ',';
    out << 'x' << (j + 1);
  }
  out << '\n';
  for (const CountVector& row : rows) {
    if (row.size() != r) throw DimensionMismatch("ragged row in CSV output");
    for (std::size_t j = 0; j < r; ++j) {
      if (j) out << ',';
      out << row[j];
    }
    out << '\n';
  }
}

void write_count_csv(const std::string& path,
                     const std::vector<CountVector>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  format_count_csv(out, rows);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace ugat
