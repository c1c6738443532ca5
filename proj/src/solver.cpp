#include "gsm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gsm/banded.hpp"
#include "gsm/closed_form.hpp"
#include "gsm/errors.hpp"

namespace gsm {

void SolverConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(newton_tol > 0.0)) throw std::invalid_argument("newton_tol must be positive");
    if (newton_max_iters < 1) throw std::invalid_argument("newton_max_iters must be at least 1");
    if (!(steady_tol > 0.0)) throw std::invalid_argument("steady_tol must be positive");
    if (!(damping_min > 0.0 && damping_min <= 1.0)) {
        throw std::invalid_argument("damping_min must lie in (0, 1]");
    }
}

namespace {

constexpr std::size_t kSpecies = 3;
constexpr std::size_t kBandwidth = 3;  // interleaved (u_i, v_i, w_i) ordering

void check_alignment(const ConcentrationField& field, const Grid& grid) {
    if (field.u.size() != grid.size() || field.v.size() != grid.size() ||
        field.w.size() != grid.size()) {
        throw ContractError("field arrays do not match the grid size");
    }
}

// Interleaved state vector helpers.
std::vector<double> pack(const ConcentrationField& f) {
    const std::size_t n = f.size();
    std::vector<double> y(kSpecies * n);
    for (std::size_t i = 0; i < n; ++i) {
        y[kSpecies * i + 0] = f.u[i];
        y[kSpecies * i + 1] = f.v[i];
        y[kSpecies * i + 2] = f.w[i];
    }
    return y;
}

ConcentrationField unpack(const std::vector<double>& y, double tau) {
    const std::size_t n = y.size() / kSpecies;
    ConcentrationField f;
    f.tau = tau;
    f.u.resize(n);
    f.v.resize(n);
    f.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        f.u[i] = y[kSpecies * i + 0];
        f.v[i] = y[kSpecies * i + 1];
        f.w[i] = y[kSpecies * i + 2];
    }
    return f;
}

double inf_norm(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

// Discrete system shared by the steady solver and the implicit stepper.
// Steady mode solves F(y) = 0; transient mode solves
// y - y_old - dt F(y) = 0 for one implicit Euler step.
struct DiscreteSystem {
    const DimensionlessParams& p;
    const Grid& grid;
    bool transient = false;
    double dt = 0.0;
    const std::vector<double>* y_old = nullptr;

    std::size_t unknowns() const { return kSpecies * grid.size(); }

    // Semidiscrete rates F(y); boundary rows are y - bath value so Dirichlet
    // data stays pinned in both modes.
    void residual(const std::vector<double>& y, std::vector<double>& out) const {
        const std::size_t n = grid.size();
        const double h2 = grid.spacing() * grid.spacing();
        const double diff[kSpecies] = {1.0, p.eta, p.mu};
        const double reac[kSpecies] = {-p.gamma_e1, -0.5 * p.gamma_s1, p.gamma_s1};
        out.resize(kSpecies * n);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double g =
                detail::reaction_term_total(y[kSpecies * i], y[kSpecies * i + 1], p.alpha, p.beta);
            for (std::size_t s = 0; s < kSpecies; ++s) {
                const std::size_t row = kSpecies * i + s;
                const double c = y[row];
                double lap;
                if (i == 0) {
                    lap = 2.0 * (y[row + kSpecies] - c) / h2;  // ghost-point reflection
                } else {
                    lap = (y[row - kSpecies] - 2.0 * c + y[row + kSpecies]) / h2;
                }
                double f = diff[s] * lap + reac[s] * g;
                if (transient) f = c - (*y_old)[row] - dt * f;
                out[row] = f;
            }
        }
        const std::size_t last = kSpecies * (n - 1);
        out[last + 0] = y[last + 0] - 1.0;
        out[last + 1] = y[last + 1] - 1.0;
        out[last + 2] = y[last + 2];
    }

    void jacobian(const std::vector<double>& y, BandedMatrix& jac) const;
};

// PDE-row Jacobian entries of the semidiscrete rates, times scale. The X = 1
// rows are left untouched.
void assemble_rate_jacobian(const std::vector<double>& y, const DimensionlessParams& p,
                            const Grid& grid, double scale, BandedMatrix& jac) {
    const std::size_t n = grid.size();
    const double h2 = grid.spacing() * grid.spacing();
    const double diff[kSpecies] = {1.0, p.eta, p.mu};
    const double reac[kSpecies] = {-p.gamma_e1, -0.5 * p.gamma_s1, p.gamma_s1};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const ReactionDerivatives dg = detail::reaction_term_derivatives_total(
            y[kSpecies * i], y[kSpecies * i + 1], p.alpha, p.beta);
        for (std::size_t s = 0; s < kSpecies; ++s) {
            const std::size_t row = kSpecies * i + s;
            const double lap_diag = -2.0 * diff[s] / h2;
            jac.at(row, kSpecies * i + 0) =
                scale * (reac[s] * dg.dg_du + (s == 0 ? lap_diag : 0.0));
            jac.at(row, kSpecies * i + 1) =
                scale * (reac[s] * dg.dg_dv + (s == 1 ? lap_diag : 0.0));
            jac.at(row, kSpecies * i + 2) = scale * (s == 2 ? lap_diag : 0.0);
            if (i == 0) {
                jac.at(row, kSpecies + s) = scale * 2.0 * diff[s] / h2;
            } else {
                jac.at(row, row - kSpecies) = scale * diff[s] / h2;
                jac.at(row, row + kSpecies) = scale * diff[s] / h2;
            }
        }
    }
}

void DiscreteSystem::jacobian(const std::vector<double>& y, BandedMatrix& jac) const {
    const std::size_t n = grid.size();
    assemble_rate_jacobian(y, p, grid, transient ? -dt : 1.0, jac);
    if (transient) {
        for (std::size_t row = 0; row + kSpecies < kSpecies * n; ++row) {
            jac.at(row, row) += 1.0;
        }
    }
    const std::size_t last = kSpecies * (n - 1);
    for (std::size_t s = 0; s < kSpecies; ++s) jac.at(last + s, last + s) = 1.0;
}

// Damped Newton iteration on the discrete system. Returns the converged
// state; throws NumericError with the residual trace otherwise.
std::vector<double> newton_solve(const DiscreteSystem& sys, std::vector<double> y,
                                 const SolverConfig& cfg, const char* label) {
    std::vector<double> residual, trial_residual, trial;
    std::vector<double> trace;
    sys.residual(y, residual);
    double norm = inf_norm(residual);
    trace.push_back(norm);

    for (int iter = 0; iter < cfg.newton_max_iters; ++iter) {
        if (norm < cfg.newton_tol) return y;

        BandedMatrix jac(sys.unknowns(), kBandwidth, kBandwidth);
        sys.jacobian(y, jac);
        for (double& r : residual) r = -r;
        const std::vector<double> step = banded_solve(std::move(jac), residual);

        double lambda = 1.0;
        bool accepted = false;
        while (true) {
            trial = y;
            for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += lambda * step[i];
            sys.residual(trial, trial_residual);
            const double trial_norm = inf_norm(trial_residual);
            if (trial_norm < norm) {
                y.swap(trial);
                residual.swap(trial_residual);
                norm = trial_norm;
                accepted = true;
                break;
            }
            if (lambda <= cfg.damping_min) break;
            lambda = std::max(0.5 * lambda, cfg.damping_min);
        }
        if (!accepted) {
            throw NumericError(std::string(label) +
                                   ": Newton damping exhausted without residual decrease",
                               trace);
        }
        trace.push_back(norm);
    }
    if (norm < cfg.newton_tol) return y;
    throw NumericError(std::string(label) + ": Newton did not converge in " +
                           std::to_string(cfg.newton_max_iters) + " iterations",
                       trace);
}

// Closed-form profiles as the steady solver's starting point; flat bath
// state when there is no reaction. Negative closed-form oxygen values are
// clamped in the guess only.
std::vector<double> steady_initial_guess(const DimensionlessParams& p, const Grid& grid) {
    const std::size_t n = grid.size();
    ConcentrationField f;
    f.u.assign(n, 1.0);
    f.v.assign(n, 1.0);
    f.w.assign(n, 0.0);
    if (p.gamma_e1 > 0.0) {
        const ClosedFormCoefficients c = closed_form_coefficients(p);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = grid.point(i);
            f.u[i] = steady_u(x, c);
            f.v[i] = std::max(steady_v(x, p, c), 0.0);
            f.w[i] = steady_w(x, p, c);
        }
    }
    return pack(f);
}

}  // namespace

FieldRates semidiscrete_rhs(const ConcentrationField& field, const DimensionlessParams& p,
                            const Grid& grid) {
    check_alignment(field, grid);
    p.validate();
    const std::size_t n = grid.size();
    const double h2 = grid.spacing() * grid.spacing();

    FieldRates rates;
    rates.u.assign(n, 0.0);
    rates.v.assign(n, 0.0);
    rates.w.assign(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double g = detail::reaction_term_total(field.u[i], field.v[i], p.alpha, p.beta);
        const auto lap = [&](const std::vector<double>& c) {
            if (i == 0) return 2.0 * (c[1] - c[0]) / h2;
            return (c[i - 1] - 2.0 * c[i] + c[i + 1]) / h2;
        };
        rates.u[i] = lap(field.u) - p.gamma_e1 * g;
        rates.v[i] = p.eta * lap(field.v) - 0.5 * p.gamma_s1 * g;
        rates.w[i] = p.mu * lap(field.w) + p.gamma_s1 * g;
    }
    return rates;
}

double rates_inf_norm(const FieldRates& rates) {
    return std::max({inf_norm(rates.u), inf_norm(rates.v), inf_norm(rates.w)});
}

BandedMatrix rhs_jacobian(const ConcentrationField& field, const DimensionlessParams& p,
                          const Grid& grid) {
    check_alignment(field, grid);
    p.validate();
    BandedMatrix jac(kSpecies * grid.size(), kBandwidth, kBandwidth);
    assemble_rate_jacobian(pack(field), p, grid, 1.0, jac);
    return jac;
}

ConcentrationField step_implicit(const ConcentrationField& field, const DimensionlessParams& p,
                                 const Grid& grid, const SolverConfig& cfg) {
    check_alignment(field, grid);
    p.validate();
    cfg.validate();

    const std::vector<double> y_old = pack(field);
    DiscreteSystem sys{p, grid, /*transient=*/true, cfg.dt, &y_old};
    std::vector<double> y = newton_solve(sys, y_old, cfg, "step_implicit");
    return unpack(y, field.tau + cfg.dt);
}

TransientResult solve_transient(const DimensionlessParams& p, const Grid& grid,
                                const SolverConfig& cfg, double tau_end,
                                std::span<const double> sample_times) {
    p.validate();
    cfg.validate();
    if (!(tau_end > 0.0)) throw ContractError("tau_end must be positive");
    for (std::size_t i = 0; i < sample_times.size(); ++i) {
        if (!(sample_times[i] >= 0.0 && sample_times[i] <= tau_end)) {
            throw ContractError("sample times must lie in [0, tau_end]");
        }
        if (i > 0 && sample_times[i] < sample_times[i - 1]) {
            throw ContractError("sample times must be sorted ascending");
        }
    }

    TransientResult result;
    ConcentrationField field = initial_field(grid);
    std::size_t next_sample = 0;

    const auto emit_at = [&](double tau) {
        ConcentrationField snapshot = field;
        snapshot.tau = tau;
        result.samples.push_back(std::move(snapshot));
    };
    while (next_sample < sample_times.size() && sample_times[next_sample] <= 0.0) {
        emit_at(sample_times[next_sample]);
        ++next_sample;
    }

    SolverConfig step_cfg = cfg;
    const double time_eps = 1e-12 * std::max(1.0, tau_end);
    double tau = 0.0;
    while (tau < tau_end - time_eps) {
        double target = tau + cfg.dt;
        if (next_sample < sample_times.size()) {
            target = std::min(target, sample_times[next_sample]);
        }
        target = std::min(target, tau_end);

        step_cfg.dt = target - tau;
        field = step_implicit(field, p, grid, step_cfg);
        tau = target;
        field.tau = tau;

        while (next_sample < sample_times.size() &&
               sample_times[next_sample] <= tau + time_eps) {
            emit_at(sample_times[next_sample]);
            ++next_sample;
        }

        if (rates_inf_norm(semidiscrete_rhs(field, p, grid)) < cfg.steady_tol) {
            result.reached_steady = true;
            result.steady_tau = tau;
            break;
        }
    }

    // Steady (or tau_end) reached: any remaining samples repeat the final state.
    while (next_sample < sample_times.size()) {
        emit_at(sample_times[next_sample]);
        ++next_sample;
    }
    return result;
}

ConcentrationField solve_steady(const DimensionlessParams& p, const Grid& grid,
                                const SolverConfig& cfg) {
    p.validate();
    cfg.validate();
    DiscreteSystem sys{p, grid};
    std::vector<double> y = newton_solve(sys, steady_initial_guess(p, grid), cfg, "solve_steady");
    return unpack(y, std::numeric_limits<double>::infinity());
}

ConvergenceEstimate estimate_convergence_order(const DimensionlessParams& p,
                                               const SolverConfig& cfg,
                                               std::span<const std::size_t> grid_sizes) {
    if (grid_sizes.size() < 3) {
        throw ContractError("convergence estimate needs at least 3 nested grids");
    }
    for (std::size_t i = 1; i < grid_sizes.size(); ++i) {
        if (grid_sizes[i] != 2 * grid_sizes[i - 1] - 1) {
            throw ContractError("grid sizes must be nested as n, 2n-1, 4n-3, ...");
        }
    }

    std::vector<ConcentrationField> solutions;
    solutions.reserve(grid_sizes.size());
    for (std::size_t n : grid_sizes) {
        solutions.push_back(solve_steady(p, Grid(n), cfg));
    }

    ConvergenceEstimate estimate;
    for (std::size_t level = 0; level + 1 < solutions.size(); ++level) {
        const ConcentrationField& coarse = solutions[level];
        const ConcentrationField& fine = solutions[level + 1];
        double d = 0.0;
        for (std::size_t i = 0; i < coarse.size(); ++i) {
            d = std::max({d, std::abs(coarse.u[i] - fine.u[2 * i]),
                          std::abs(coarse.v[i] - fine.v[2 * i]),
                          std::abs(coarse.w[i] - fine.w[2 * i])});
        }
        estimate.diffs.push_back(d);
    }

    constexpr double roundoff = 1e-12;
    estimate.exact = std::all_of(estimate.diffs.begin(), estimate.diffs.end(),
                                 [](double d) { return d < roundoff; });
    if (estimate.exact) {
        estimate.order = std::numeric_limits<double>::quiet_NaN();
    } else {
        const double d1 = estimate.diffs[estimate.diffs.size() - 2];
        const double d2 = estimate.diffs.back();
        estimate.order = std::log2(d1 / d2);
    }
    return estimate;
}

}  // namespace gsm
