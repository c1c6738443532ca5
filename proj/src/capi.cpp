// C surface of the library: translates between the C structs/handles of
// gsm.h and the C++ core, and converts exceptions into status codes with a
// thread-local message.

#include "gsm.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsm/closed_form.hpp"
#include "gsm/errors.hpp"
#include "gsm/grid.hpp"
#include "gsm/params.hpp"
#include "gsm/solver.hpp"
#include "gsm/validation.hpp"

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const char* message) { g_last_error = message; }

gsm_status fail(gsm_status code, const char* message) {
    set_error(message);
    return code;
}

// Runs fn, mapping C++ errors onto status codes.
template <typename Fn>
gsm_status guarded(Fn&& fn) {
    try {
        fn();
        return GSM_OK;
    } catch (const gsm::NumericError& e) {
        return fail(GSM_ERROR_NUMERIC, e.what());
    } catch (const gsm::ContractError& e) {
        return fail(GSM_ERROR_CONTRACT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(GSM_ERROR_DOMAIN, e.what());
    } catch (const std::logic_error& e) {
        return fail(GSM_ERROR_CONTRACT, e.what());
    } catch (const std::exception& e) {
        return fail(GSM_ERROR_INTERNAL, e.what());
    }
}

gsm::DimensionalParams to_cpp(const gsm_dimensional_params& p) {
    return gsm::DimensionalParams{p.c_g_star, p.c_ox_star, p.d_g,  p.d_ox,          p.d_a,
                                  p.k_g,      p.k_ox,      p.v_max, p.half_thickness};
}

gsm::DimensionlessParams to_cpp(const gsm_params& p) {
    return gsm::DimensionlessParams{p.alpha, p.beta, p.gamma_e1, p.gamma_s1, p.eta, p.mu};
}

gsm_params to_c(const gsm::DimensionlessParams& p) {
    return gsm_params{p.alpha, p.beta, p.gamma_e1, p.gamma_s1, p.eta, p.mu};
}

gsm::SolverConfig to_cpp_config(const gsm_solver_config* cfg) {
    if (cfg == nullptr) return gsm::SolverConfig{};
    gsm::SolverConfig out;
    out.dt = cfg->dt;
    out.newton_tol = cfg->newton_tol;
    out.newton_max_iters = cfg->newton_max_iters;
    out.steady_tol = cfg->steady_tol;
    out.damping_min = cfg->damping_min;
    return out;
}

std::size_t config_grid_n(const gsm_solver_config* cfg) {
    if (cfg == nullptr) return 201;
    if (cfg->grid_n < 3) throw gsm::ContractError("grid_n must be at least 3");
    return static_cast<std::size_t>(cfg->grid_n);
}

gsm::Species to_species(int species) {
    switch (species) {
        case GSM_SPECIES_GLUCOSE: return gsm::Species::glucose;
        case GSM_SPECIES_OXYGEN: return gsm::Species::oxygen;
        case GSM_SPECIES_GLUCONIC_ACID: return gsm::Species::gluconic_acid;
        default: throw gsm::ContractError("invalid species selector");
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw gsm::ContractError(std::string("null pointer: ") + what);
}

}  // namespace

struct gsm_field {
    gsm::ConcentrationField field;
    std::size_t grid_n;
};

struct gsm_table {
    gsm::ErrorReport report;
};

struct gsm_sweep {
    gsm::SweepResult result;
};

struct gsm_sensitivity {
    gsm::SensitivityReport report;
};

extern "C" {

const char* gsm_last_error(void) { return g_last_error.c_str(); }

const char* gsm_version(void) { return "1.0.0"; }

gsm_status gsm_nondimensionalize(const gsm_dimensional_params* in, gsm_params* out) {
    return guarded([&] {
        require(in, "in");
        require(out, "out");
        *out = to_c(gsm::nondimensionalize(to_cpp(*in)));
    });
}

gsm_status gsm_reaction_rate(const gsm_dimensional_params* p, double c_g, double c_ox,
                             double* rate) {
    return guarded([&] {
        require(p, "p");
        require(rate, "rate");
        *rate = gsm::reaction_rate_dimensional(c_g, c_ox, to_cpp(*p));
    });
}

gsm_status gsm_reaction_term(double u, double v, double alpha, double beta, double* g) {
    return guarded([&] {
        require(g, "g");
        *g = gsm::reaction_term(u, v, alpha, beta);
    });
}

gsm_status gsm_initial_profile(double x, double* u, double* v, double* w) {
    return guarded([&] {
        const gsm::InitialValues iv = gsm::initial_profile(x);
        if (u) *u = iv.u;
        if (v) *v = iv.v;
        if (w) *w = iv.w;
    });
}

gsm_status gsm_thiele_k(double gamma_e1, double alpha, double beta, double* k) {
    return guarded([&] {
        require(k, "k");
        *k = gsm::thiele_k(gamma_e1, alpha, beta);
    });
}

gsm_status gsm_agm_m(double gamma_e1, double alpha, double beta, double tol, double* m) {
    return guarded([&] {
        require(m, "m");
        *m = gsm::agm_m(gamma_e1, alpha, beta, tol);
    });
}

gsm_status gsm_closed_form_coefficients_compute(const gsm_params* p, double root_tol,
                                                gsm_closed_form_coefficients* out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        const gsm::ClosedFormCoefficients c = gsm::closed_form_coefficients(to_cpp(*p), root_tol);
        *out = gsm_closed_form_coefficients{c.k, c.sqrt_k, c.m, c.a_v, c.b_w};
    });
}

gsm_status gsm_closed_form_profile(const gsm_params* p, int method, double x, double* u,
                                   double* v, double* w) {
    return guarded([&] {
        require(p, "p");
        if (method != GSM_CLOSED_FORM_VIM && method != GSM_CLOSED_FORM_AGM) {
            throw gsm::ContractError("invalid closed-form method selector");
        }
        const gsm::DimensionlessParams params = to_cpp(*p);
        const gsm::ClosedFormCoefficients c = gsm::closed_form_coefficients(params);
        const bool agm_route = method == GSM_CLOSED_FORM_AGM;
        if (u) *u = agm_route ? gsm::agm_u(x, c) : gsm::steady_u(x, c);
        if (v) *v = agm_route ? gsm::agm_v(x, params, c) : gsm::steady_v(x, params, c);
        if (w) *w = agm_route ? gsm::agm_w(x, params, c) : gsm::steady_w(x, params, c);
    });
}

gsm_status gsm_vim_profile(const gsm_params* p, double x, double tau, double* u, double* v,
                           double* w) {
    return guarded([&] {
        require(p, "p");
        const gsm::DimensionlessParams params = to_cpp(*p);
        if (u) *u = gsm::vim_u(x, tau, params);
        if (v) *v = gsm::vim_v(x, tau, params);
        if (w) *w = gsm::vim_w(x, tau, params);
    });
}

void gsm_solver_config_defaults(gsm_solver_config* cfg) {
    if (cfg == nullptr) return;
    const gsm::SolverConfig d;
    cfg->grid_n = 201;
    cfg->dt = d.dt;
    cfg->newton_tol = d.newton_tol;
    cfg->newton_max_iters = d.newton_max_iters;
    cfg->steady_tol = d.steady_tol;
    cfg->damping_min = d.damping_min;
}

size_t gsm_field_size(const gsm_field* f) { return f ? f->field.size() : 0; }

double gsm_field_tau(const gsm_field* f) { return f ? f->field.tau : 0.0; }

gsm_status gsm_field_values(const gsm_field* f, double* x, double* u, double* v, double* w) {
    return guarded([&] {
        require(f, "field");
        const gsm::Grid grid(f->grid_n);
        for (std::size_t i = 0; i < f->field.size(); ++i) {
            if (x) x[i] = grid.point(i);
            if (u) u[i] = f->field.u[i];
            if (v) v[i] = f->field.v[i];
            if (w) w[i] = f->field.w[i];
        }
    });
}

void gsm_field_free(gsm_field* f) { delete f; }

gsm_status gsm_solve_steady(const gsm_params* p, const gsm_solver_config* cfg, gsm_field** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        const std::size_t n = config_grid_n(cfg);
        gsm::ConcentrationField field =
            gsm::solve_steady(to_cpp(*p), gsm::Grid(n), to_cpp_config(cfg));
        *out = new gsm_field{std::move(field), n};
    });
}

gsm_status gsm_solve_transient(const gsm_params* p, const gsm_solver_config* cfg, double tau_end,
                               const double* sample_taus, size_t n_samples,
                               gsm_field*** fields_out, int* reached_steady) {
    return guarded([&] {
        require(p, "p");
        require(fields_out, "fields_out");
        if (n_samples > 0) require(sample_taus, "sample_taus");
        const std::size_t n = config_grid_n(cfg);
        gsm::TransientResult result =
            gsm::solve_transient(to_cpp(*p), gsm::Grid(n), to_cpp_config(cfg), tau_end,
                                 std::span<const double>(sample_taus, n_samples));

        gsm_field** fields = new gsm_field*[n_samples > 0 ? n_samples : 1]();
        for (std::size_t i = 0; i < result.samples.size(); ++i) {
            fields[i] = new gsm_field{std::move(result.samples[i]), n};
        }
        *fields_out = fields;
        if (reached_steady) *reached_steady = result.reached_steady ? 1 : 0;
    });
}

void gsm_field_array_free(gsm_field** fields, size_t n) {
    if (fields == nullptr) return;
    for (size_t i = 0; i < n; ++i) delete fields[i];
    delete[] fields;
}

gsm_status gsm_residual_norm(const gsm_field* f, const gsm_params* p, double* rate_norm) {
    return guarded([&] {
        require(f, "field");
        require(p, "p");
        require(rate_norm, "rate_norm");
        const gsm::Grid grid(f->grid_n);
        *rate_norm = gsm::rates_inf_norm(gsm::semidiscrete_rhs(f->field, to_cpp(*p), grid));
    });
}

gsm_status gsm_estimate_convergence_order(const gsm_params* p, const gsm_solver_config* cfg,
                                          const int* grid_sizes, size_t n_sizes, double* order,
                                          int* exact) {
    return guarded([&] {
        require(p, "p");
        require(grid_sizes, "grid_sizes");
        require(order, "order");
        std::vector<std::size_t> sizes;
        sizes.reserve(n_sizes);
        for (size_t i = 0; i < n_sizes; ++i) {
            if (grid_sizes[i] < 3) throw gsm::ContractError("grid sizes must be at least 3");
            sizes.push_back(static_cast<std::size_t>(grid_sizes[i]));
        }
        const gsm::ConvergenceEstimate estimate =
            gsm::estimate_convergence_order(to_cpp(*p), to_cpp_config(cfg), sizes);
        *order = estimate.order;
        if (exact) *exact = estimate.exact ? 1 : 0;
    });
}

gsm_status gsm_check_steady_invariants(const gsm_field* f, const gsm_params* p,
                                       gsm_invariant_audit* out) {
    return guarded([&] {
        require(f, "field");
        require(p, "p");
        require(out, "out");
        const gsm::InvariantAudit a = gsm::check_steady_invariants(f->field, to_cpp(*p));
        *out = gsm_invariant_audit{a.coupling_uv,
                                   a.coupling_uw,
                                   a.boundary,
                                   a.u_nondecreasing ? 1 : 0,
                                   a.v_nondecreasing ? 1 : 0,
                                   a.w_nonincreasing ? 1 : 0,
                                   a.min_u,
                                   a.min_v,
                                   a.min_w,
                                   a.negative_concentration ? 1 : 0};
    });
}

gsm_status gsm_reproduce_table(int table_id, const gsm_solver_config* cfg, gsm_table** out) {
    return guarded([&] {
        require(out, "out");
        const std::size_t n = config_grid_n(cfg);
        gsm::ErrorReport report =
            gsm::reproduce_table(table_id, gsm::Grid(n), to_cpp_config(cfg));
        *out = new gsm_table{std::move(report)};
    });
}

size_t gsm_table_scenario_count(const gsm_table* t) { return t ? t->report.scenarios.size() : 0; }

gsm_status gsm_table_scenario(const gsm_table* t, size_t scenario, gsm_params* params,
                              int* qualitative) {
    return guarded([&] {
        require(t, "table");
        if (scenario >= t->report.scenarios.size()) {
            throw gsm::ContractError("scenario index out of range");
        }
        const gsm::ScenarioReport& s = t->report.scenarios[scenario];
        if (params) *params = to_c(s.params);
        if (qualitative) *qualitative = s.qualitative ? 1 : 0;
    });
}

size_t gsm_table_row_count(const gsm_table* t, size_t scenario) {
    if (t == nullptr || scenario >= t->report.scenarios.size()) return 0;
    return t->report.scenarios[scenario].rows.size();
}

gsm_status gsm_table_row(const gsm_table* t, size_t scenario, size_t row, double columns[6]) {
    return guarded([&] {
        require(t, "table");
        require(columns, "columns");
        if (scenario >= t->report.scenarios.size()) {
            throw gsm::ContractError("scenario index out of range");
        }
        const gsm::ScenarioReport& s = t->report.scenarios[scenario];
        if (row >= s.rows.size()) throw gsm::ContractError("row index out of range");
        const gsm::ErrorReportRow& r = s.rows[row];
        columns[0] = r.x;
        columns[1] = r.numerical;
        columns[2] = r.vim;
        columns[3] = r.agm;
        columns[4] = r.dev_vim.value;
        columns[5] = r.dev_agm.value;
    });
}

gsm_status gsm_table_means(const gsm_table* t, size_t scenario, double* mean_dev_vim,
                           double* mean_dev_agm) {
    return guarded([&] {
        require(t, "table");
        if (scenario >= t->report.scenarios.size()) {
            throw gsm::ContractError("scenario index out of range");
        }
        const gsm::ScenarioReport& s = t->report.scenarios[scenario];
        if (mean_dev_vim) *mean_dev_vim = s.mean_dev_vim;
        if (mean_dev_agm) *mean_dev_agm = s.mean_dev_agm;
    });
}

void gsm_table_free(gsm_table* t) { delete t; }

gsm_status gsm_profile_sweep(int species, const char* parameter, const double* values,
                             size_t n_values, const gsm_params* fixed, size_t resolution,
                             gsm_sweep** out) {
    return guarded([&] {
        require(parameter, "parameter");
        require(fixed, "fixed");
        require(out, "out");
        if (n_values > 0) require(values, "values");
        gsm::SweepResult result =
            gsm::profile_sweep(to_species(species), parameter,
                               std::span<const double>(values, n_values), to_cpp(*fixed),
                               resolution);
        *out = new gsm_sweep{std::move(result)};
    });
}

size_t gsm_sweep_series_count(const gsm_sweep* s) { return s ? s->result.series.size() : 0; }

size_t gsm_sweep_resolution(const gsm_sweep* s) { return s ? s->result.x.size() : 0; }

gsm_status gsm_sweep_x(const gsm_sweep* s, double* x) {
    return guarded([&] {
        require(s, "sweep");
        require(x, "x");
        std::memcpy(x, s->result.x.data(), s->result.x.size() * sizeof(double));
    });
}

gsm_status gsm_sweep_series(const gsm_sweep* s, size_t series, const char** name_out,
                            double* value_out, double* y_out) {
    return guarded([&] {
        require(s, "sweep");
        if (series >= s->result.series.size()) {
            throw gsm::ContractError("series index out of range");
        }
        const gsm::SweepSeries& sr = s->result.series[series];
        if (name_out) *name_out = sr.name.c_str();
        if (value_out) *value_out = sr.value;
        if (y_out) std::memcpy(y_out, sr.y.data(), sr.y.size() * sizeof(double));
    });
}

void gsm_sweep_free(gsm_sweep* s) { delete s; }

gsm_status gsm_sensitivity_analysis(int target_species, const gsm_params* p,
                                    const gsm_solver_config* cfg, double delta, int functional,
                                    gsm_sensitivity** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        gsm::SensitivityFunctional f;
        switch (functional) {
            case GSM_FUNCTIONAL_VALUE_AT_CENTER:
                f = gsm::SensitivityFunctional::value_at_center;
                break;
            case GSM_FUNCTIONAL_MEAN_OVER_X:
                f = gsm::SensitivityFunctional::mean_over_x;
                break;
            default: throw gsm::ContractError("invalid functional selector");
        }
        const std::size_t n = config_grid_n(cfg);
        gsm::SensitivityReport report = gsm::sensitivity_analysis(
            to_species(target_species), to_cpp(*p), gsm::Grid(n), to_cpp_config(cfg), delta, f);
        *out = new gsm_sensitivity{std::move(report)};
    });
}

size_t gsm_sensitivity_count(const gsm_sensitivity* s) {
    return s ? s->report.entries.size() : 0;
}

gsm_status gsm_sensitivity_entry(const gsm_sensitivity* s, size_t index, const char** parameter,
                                 double* sensitivity, double* share_percent, int* failed) {
    return guarded([&] {
        require(s, "sensitivity");
        if (index >= s->report.entries.size()) {
            throw gsm::ContractError("entry index out of range");
        }
        const gsm::SensitivityEntry& e = s->report.entries[index];
        if (parameter) *parameter = e.parameter.c_str();
        if (sensitivity) *sensitivity = e.sensitivity;
        if (share_percent) *share_percent = e.share_percent;
        if (failed) *failed = e.failed ? 1 : 0;
    });
}

void gsm_sensitivity_free(gsm_sensitivity* s) { delete s; }

}  // extern "C"
