#ifndef GSM_CLI_SVG_HPP
#define GSM_CLI_SVG_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gsm::cli {

struct SvgSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;  ///< same length as x, at least 2 points
};

struct SvgAxes {
    std::string title;
    std::string x_label;
    std::string y_label;
};

/// Standalone SVG line chart: one polyline per series, linear axes with tick
/// labels, legend from the series names, metadata as XML comments.
/// Deterministic byte output. Throws ContractError for series with fewer
/// than 2 points or non-finite values (naming the series).
void emit_svg_polyline(std::ostream& out, const std::vector<SvgSeries>& series,
                       const SvgAxes& axes, const std::vector<std::string>& metadata);

/// emit_svg_polyline to a file; throws IoError on failure.
void write_svg_file(const std::string& path, const std::vector<SvgSeries>& series,
                    const SvgAxes& axes, const std::vector<std::string>& metadata);

}  // namespace gsm::cli

#endif  // GSM_CLI_SVG_HPP
