#include "fidres/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fidres::cli {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

CsvTable parse_csv(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  CsvTable table;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto fields = split_line(line);
    if (table.header.empty()) {
      for (const auto& f : fields) table.header.push_back(trim(f));
      continue;
    }
    if (fields.size() != table.header.size())
      throw std::runtime_error(name + ": row " + std::to_string(row) + " has " +
                               std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(table.header.size()));
    std::vector<double> values;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const std::string f = trim(fields[c]);
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(f, &pos);
      } catch (const std::exception&) {
        pos = std::string::npos;
      }
      if (pos != f.size() || f.empty())
        throw std::runtime_error(name + ": row " + std::to_string(row) + ", field '" +
                                 table.header[c] + "': not a number: '" + f + "'");
      values.push_back(v);
    }
    table.rows.push_back(std::move(values));
  }
  if (table.header.empty()) throw std::runtime_error(name + ": empty file");
  return table;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), path);
}

std::string to_csv(const CsvTable& table) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t c = 0; c < table.header.size(); ++c)
    out << (c ? "," : "") << table.header[c];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
  return out.str();
}

}  // namespace fidres::cli
