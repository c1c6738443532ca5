#ifndef GSM_VALIDATION_HPP
#define GSM_VALIDATION_HPP

/**
 * @file validation.hpp
 * @brief Quantitative cross-checks: numerical-vs-closed-form comparison
 *        tables, closed-form parameter sweeps, local sensitivity shares,
 *        and the steady-state invariant audit.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gsm/grid.hpp"
#include "gsm/params.hpp"
#include "gsm/solver.hpp"

namespace gsm {

enum class Species { glucose, oxygen, gluconic_acid };

/// Relative deviation |numerical - approx| / numerical, stored as a
/// fraction (0.0053 means 0.53%).
struct Deviation {
    double value = 0.0;
    bool flagged = false;  ///< reference was 0 with a nonzero approximation
};

/// 0 when both inputs are 0; flagged sentinel when only the reference is 0.
Deviation relative_deviation(double numerical, double approx);

struct ErrorReportRow {
    double x;
    double numerical;
    double vim;
    double agm;
    Deviation dev_vim;
    Deviation dev_agm;
};

struct ScenarioReport {
    DimensionlessParams params;
    bool qualitative = false;  ///< published column is not quantitatively comparable
    std::vector<ErrorReportRow> rows;
    double mean_dev_vim = 0.0;
    double mean_dev_agm = 0.0;
};

struct ErrorReport {
    int table_id = 0;
    Species species = Species::glucose;
    std::vector<ScenarioReport> scenarios;
};

/// Runs the steady solver and both closed-form routes at X = 0, 0.2, ..., 1
/// for the bundled scenario sets of table 1 (glucose), 2 (oxygen) or
/// 3 (gluconic acid). The grid must contain the six abscissae, i.e.
/// (n - 1) divisible by 5.
ErrorReport reproduce_table(int table_id, const Grid& grid, const SolverConfig& cfg);

struct SweepSeries {
    std::string name;       ///< "<parameter>=<value>"
    double value;
    std::vector<double> y;  ///< profile samples, aligned with SweepResult::x
};

struct SweepResult {
    Species species;
    std::string parameter;
    std::vector<double> x;
    std::vector<SweepSeries> series;
};

/// Evaluates the steady closed-form profile of one species over X in [0, 1]
/// for each value of the varied parameter. Valid parameter names are
/// alpha, beta, gammaE1, gammaS1, eta, mu and k (which overrides the
/// linearized Thiele group directly).
SweepResult profile_sweep(Species species, const std::string& parameter,
                          std::span<const double> values, const DimensionlessParams& fixed,
                          std::size_t resolution);

enum class SensitivityFunctional {
    value_at_center,  ///< profile value at X = 0
    mean_over_x,      ///< trapezoidal mean over [0, 1]
};

struct SensitivityEntry {
    std::string parameter;
    double sensitivity = 0.0;    ///< normalized local sensitivity |(df/f)/(dq/q)|
    double share_percent = 0.0;  ///< 100 * sensitivity / sum over successes
    bool failed = false;         ///< solver failed at a perturbed point
};

struct SensitivityReport {
    Species target;
    double delta;
    SensitivityFunctional functional;
    std::vector<SensitivityEntry> entries;  ///< alpha, beta, gammaE1, gammaS1, eta, mu
};

/// Central-difference normalized local sensitivities of the steady solution,
/// one parameter at a time with relative perturbation delta in (0, 0.1].
/// Shares are renormalized over the parameters whose perturbed solves
/// succeeded.
SensitivityReport sensitivity_analysis(Species target, const DimensionlessParams& p,
                                       const Grid& grid, const SolverConfig& cfg,
                                       double delta = 0.01,
                                       SensitivityFunctional functional =
                                           SensitivityFunctional::value_at_center);

struct InvariantAudit {
    double coupling_uv = 0.0;  ///< max |gS1 u - 2 eta gE1 v - (gS1 - 2 eta gE1)|
    double coupling_uw = 0.0;  ///< max |gS1 u + mu gE1 w - gS1|
    double boundary = 0.0;     ///< max violation of u=v=1, w=0 at X=1
    bool u_nondecreasing = true;
    bool v_nondecreasing = true;
    bool w_nonincreasing = true;
    double min_u = 0.0;
    double min_v = 0.0;
    double min_w = 0.0;
    bool negative_concentration = false;  ///< physical breakdown flag
};

/// Pure audit of a steady-solution candidate: linear coupling identities,
/// boundary values, monotonicity, and sign. Nothing is clamped or repaired.
InvariantAudit check_steady_invariants(const ConcentrationField& field,
                                       const DimensionlessParams& p);

}  // namespace gsm

#endif  // GSM_VALIDATION_HPP
