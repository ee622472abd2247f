#include "mzscatter/csv_table.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace mzscatter {

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {
  if (header_.empty()) throw std::invalid_argument("CSV header is empty");
}

void CsvTable::add_metadata(std::string line) {
  metadata_.push_back(std::move(line));
}

void CsvTable::add_row(Row row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument(fmt::format(
        "row has {} cells, header has {}", row.size(), header_.size()));
  }
  rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& out) const {
  for (const auto& line : metadata_) out << "# " << line << '\n';
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out << ',';
    out << header_[i];
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (row[i]) out << fmt::format("{:.17g}", *row[i]);
    }
    out << '\n';
  }
}

std::string CsvTable::to_string() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

}  // namespace mzscatter
