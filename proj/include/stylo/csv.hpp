#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stylo::csv {

/// A parsed CSV file: header plus rows, each row as wide as the header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;  // 1-based line of each row

  /// Column index by name, or nullopt.
  std::optional<std::size_t> column(std::string_view name) const;
};

/// RFC 4180 reader: quoted fields may contain commas, quotes ("") and newlines.
/// Rows shorter than the header are padded with empty fields; longer rows
/// are a ParseError.
Table parse(std::istream& in);
Table read_file(const std::filesystem::path& path);

/// Quotes a field when it contains a comma, quote or newline.
std::string escape(std::string_view field);
std::string join_row(const std::vector<std::string>& fields);

/// Fixed 6-decimal formatting, correctly rounded (ties to even on the exact
/// binary value). Negative zero prints as "0.000000".
std::string fixed6(double value);

/// Parses a whole field as a finite double; nullopt on empty or malformed text.
std::optional<double> parse_number(std::string_view field);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace stylo::csv
