#ifndef GSM_CLI_CSV_HPP
#define GSM_CLI_CSV_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace gsm::cli {

/// A CSV cell: numbers are formatted with 6 significant digits, strings
/// (labels, blanks) pass through verbatim.
using CsvCell = std::variant<double, std::string>;
using CsvRow = std::vector<CsvCell>;

struct CsvDocument {
    std::vector<std::string> comments;  ///< metadata lines, emitted as "# ..."
    std::vector<std::string> columns;   ///< header
    std::vector<CsvRow> rows;           ///< each row must match the header width
};

/// Formats a double with 6 significant digits (the CSV number format).
std::string format_number(double value);

/// Writes comments, header, then rows; newline-terminated, byte-deterministic.
/// Throws ContractError if a row width differs from the header.
void emit_csv(std::ostream& out, const CsvDocument& doc);

/// emit_csv to a file; throws IoError on failure.
void write_csv_file(const std::string& path, const CsvDocument& doc);

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gsm::cli

#endif  // GSM_CLI_CSV_HPP
