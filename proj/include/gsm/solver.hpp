#ifndef GSM_SOLVER_HPP
#define GSM_SOLVER_HPP

/**
 * @file solver.hpp
 * @brief Nonlinear finite-difference solver for the reduced transport system
 *
 *   du/dtau =      u_XX - gamma_e1      g(u, v)
 *   dv/dtau = eta  v_XX - gamma_s1 / 2  g(u, v)
 *   dw/dtau = mu   w_XX + gamma_s1      g(u, v)
 *
 * on X in [0, 1] with zero flux at the midplane X = 0 and bath values
 * u = v = 1, w = 0 at X = 1.
 *
 * Space: second-order central differences; the symmetry boundary uses a
 * ghost-point reflection, which keeps second order at X = 0. Time: implicit
 * Euler with a damped Newton solve per step. Unknowns are interleaved per
 * node as (u_i, v_i, w_i), so the Jacobian is banded with half-bandwidth 3
 * and each Newton step is one banded elimination.
 *
 * The steady problem is solved directly by the same Newton machinery,
 * started from the closed-form profiles.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "gsm/banded.hpp"
#include "gsm/grid.hpp"
#include "gsm/params.hpp"

namespace gsm {

struct SolverConfig {
    double dt = 1e-3;           ///< implicit Euler step
    double newton_tol = 1e-10;  ///< residual infinity-norm target
    int newton_max_iters = 50;
    double steady_tol = 1e-8;   ///< |du/dtau| infinity-norm marking steady state
    double damping_min = 1.0 / 64.0;

    void validate() const;
};

/// Per-point time derivatives of the semidiscrete system.
struct FieldRates {
    std::vector<double> u;
    std::vector<double> v;
    std::vector<double> w;
};

/// Right-hand side of the method-of-lines system at the field's state.
/// The X = 1 entries are 0 (pinned boundary values).
FieldRates semidiscrete_rhs(const ConcentrationField& field, const DimensionlessParams& p,
                            const Grid& grid);

/// Infinity norm over all three rate arrays.
double rates_inf_norm(const FieldRates& rates);

/// Banded Jacobian of semidiscrete_rhs at the field state: half-bandwidth 3
/// with interleaved (u_i, v_i, w_i) unknowns, reaction partials in closed
/// form. The X = 1 rows are zero (pinned values). Mainly a verification
/// surface for finite-difference checks.
BandedMatrix rhs_jacobian(const ConcentrationField& field, const DimensionlessParams& p,
                          const Grid& grid);

/// One implicit Euler step of length cfg.dt from field.tau. Newton uses the
/// closed-form Jacobian of g and halves the update until the residual drops,
/// flooring at cfg.damping_min. Throws NumericError with the residual trace
/// on non-convergence.
ConcentrationField step_implicit(const ConcentrationField& field, const DimensionlessParams& p,
                                 const Grid& grid, const SolverConfig& cfg);

struct TransientResult {
    std::vector<ConcentrationField> samples;  ///< one per requested time, in order
    bool reached_steady = false;
    double steady_tau = 0.0;  ///< time at which the steady test first passed
};

/// Integrates from the initial cosh profile to tau_end, returning the field
/// at each requested sample time (a tau = 0 sample reproduces the initial
/// condition exactly). Stops early once the rate norm falls below
/// cfg.steady_tol; later samples then repeat the steady field.
TransientResult solve_transient(const DimensionlessParams& p, const Grid& grid,
                                const SolverConfig& cfg, double tau_end,
                                std::span<const double> sample_times);

/// Damped Newton solve of the discretized steady system, initialized from
/// the closed-form profiles. The returned field has residual infinity-norm
/// below cfg.newton_tol and exact boundary values at X = 1.
ConcentrationField solve_steady(const DimensionlessParams& p, const Grid& grid,
                                const SolverConfig& cfg);

struct ConvergenceEstimate {
    bool exact = false;   ///< solutions agree to roundoff on all grids
    double order = 0.0;   ///< Richardson order from the finest grid pair
    std::vector<double> diffs;  ///< successive inf-norm differences on shared points
};

/// Richardson order estimate from steady solutions on nested grids
/// (each size must be 2n-1 of the previous). Requires at least 3 sizes.
ConvergenceEstimate estimate_convergence_order(const DimensionlessParams& p,
                                               const SolverConfig& cfg,
                                               std::span<const std::size_t> grid_sizes);

}  // namespace gsm

#endif  // GSM_SOLVER_HPP
