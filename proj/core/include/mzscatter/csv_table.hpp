#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mzscatter {

// Numeric CSV with a '#' metadata preamble. Missing values are empty cells;
// numbers are written with 17 significant digits so they round-trip.
class CsvTable {
 public:
  using Row = std::vector<std::optional<double>>;

  explicit CsvTable(std::vector<std::string> header);

  void add_metadata(std::string line);
  // Throws std::invalid_argument when the row width differs from the header.
  void add_row(Row row);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::string>& metadata() const { return metadata_; }
  const std::vector<Row>& rows() const { return rows_; }

  void write(std::ostream& out) const;
  std::string to_string() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::string> metadata_;
  std::vector<Row> rows_;
};

}  // namespace mzscatter
