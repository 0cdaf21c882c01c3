#ifndef BARENBLATT_REPORT_HPP
#define BARENBLATT_REPORT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace barenblatt {

/// Reals are written with 17 significant digits ("%.17g"), which round-trips
/// every double.
std::string format_real(double v);

/// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are
/// wrapped in quotes with embedded quotes doubled.
std::string csv_field(const std::string& s);

using Cell = std::variant<double, std::int64_t, std::string, bool>;

/// Column-ordered table rendered either as CSV or as a JSON array of objects.
class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    std::string to_csv() const;
    std::string to_json(int indent = 2) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace barenblatt

#endif // BARENBLATT_REPORT_HPP
