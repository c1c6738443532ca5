#ifndef GSM_ERRORS_HPP
#define GSM_ERRORS_HPP

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsm {

/// API misuse: mismatched array sizes, unknown names, non-nested grids.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Failure of an iterative numeric procedure (Newton, banded elimination).
/// Carries the residual history of the failed iteration and, where
/// meaningful, the last iterate.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what, std::vector<double> residual_trace = {},
                          double last_iterate = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(what),
          trace_(std::move(residual_trace)),
          last_iterate_(last_iterate) {}

    const std::vector<double>& residual_trace() const noexcept { return trace_; }
    double last_iterate() const noexcept { return last_iterate_; }

private:
    std::vector<double> trace_;
    double last_iterate_;
};

}  // namespace gsm

#endif  // GSM_ERRORS_HPP
