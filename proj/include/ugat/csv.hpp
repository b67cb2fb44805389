#ifndef UGAT_CSV_HPP
#define UGAT_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ugat/fit.hpp"

namespace ugat {

// Reads a count table whose first line is the header x1,...,xr and whose
// data lines are comma-separated nonnegative integers.  Throws IoError when
// the file cannot be opened and CsvFormatError (with the line number) on any
// malformed content.
Dataset load_count_csv(const std::string& path);
Dataset parse_count_csv(std::istream& in, const std::string& label);

// Writes rows in the same format; all rows must share one dimension.
void write_count_csv(const std::string& path,
                     const std::vector<CountVector>& rows);
void format_count_csv(std::ostream& out, const std::vector<CountVector>& rows);

}  // namespace ugat

#endif
