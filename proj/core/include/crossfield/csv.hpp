#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crossfield {

// Reader for the delimited input files: comma separated, UTF-8, RFC-4180
// quoting (double-quote wrapping, quote doubling, embedded newlines),
// `#`-prefixed comment lines ignored, unquoted fields whitespace-trimmed.
class CsvReader {
  public:
    CsvReader(std::istream& in, std::string source_name);

    // Next data row, or nullopt at end of input. Throws DataError with
    // "<source>:<line>" provenance on malformed quoting.
    std::optional<std::vector<std::string>> next_row();

    // 1-based line number of the row most recently returned.
    std::size_t row_line() const { return row_line_; }

    const std::string& source() const { return source_; }

  private:
    std::istream& in_;
    std::string source_;
    std::size_t line_ = 0;
    std::size_t row_line_ = 0;
};

// Quote a single field for CSV output if it contains a delimiter, quote, or
// line break.
std::string csv_field(std::string_view value);

// Join pre-escaped fields with commas and a trailing LF.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace crossfield
