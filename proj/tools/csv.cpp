#include "csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gsm::cli {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

void emit_csv(std::ostream& out, const CsvDocument& doc) {
    for (const std::string& comment : doc.comments) {
        out << "# " << comment << "\n";
    }
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
        if (c > 0) out << ",";
        out << doc.columns[c];
    }
    out << "\n";
    for (const CsvRow& row : doc.rows) {
        if (row.size() != doc.columns.size()) {
            throw std::logic_error("csv row width does not match the header");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << ",";
            if (const double* num = std::get_if<double>(&row[c])) {
                out << format_number(*num);
            } else {
                out << std::get<std::string>(row[c]);
            }
        }
        out << "\n";
    }
}

void write_csv_file(const std::string& path, const CsvDocument& doc) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open for writing: " + path);
    emit_csv(file, doc);
    file.flush();
    if (!file) throw IoError("write failed: " + path);
}

}  // namespace gsm::cli
