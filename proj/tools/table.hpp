#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace charlier::cli {

inline constexpr const char* kSchema = "charlier-lattice/v1";

/// Empty, integer, real or text.
using Cell = std::variant<std::monostate, long long, double, std::string>;

/// Output table. Every row carries the schema tag in its first column so the
/// CSV stays plain RFC 4180 and the JSON rows are self-describing.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  void add(std::vector<Cell> row);
  std::size_t rows() const { return rows_.size(); }

  /// Header line, then one line per row. Non-finite reals print as "overflow".
  void write_csv(std::ostream& out) const;
  /// Array of row objects, keys in column order.
  void write_json(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Shortest round-trip decimal form; "overflow" if not finite.
std::string format_real(double v);

/// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_field(const std::string& s);

}  // namespace charlier::cli
