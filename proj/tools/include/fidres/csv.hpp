#ifndef FIDRES_CSV_HPP
#define FIDRES_CSV_HPP

// Minimal CSV support: comma-separated, first row headers, decimal points,
// UTF-8, no locale handling. Parse errors name the offending row and field.

#include <string>
#include <vector>

namespace fidres::cli {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Throws std::runtime_error naming the file, row, and field on failure.
CsvTable read_csv(const std::string& path);

/// Parse from an in-memory string (the `name` only labels error messages).
CsvTable parse_csv(const std::string& text, const std::string& name);

std::string to_csv(const CsvTable& table);

}  // namespace fidres::cli

#endif
