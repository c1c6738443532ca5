#include "app.hpp"

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csv.hpp"
#include "gsm.h"
#include "run_config.hpp"
#include "svg.hpp"

namespace gsm::cli {

namespace {

/// Library reported a numeric failure; maps to exit code 2.
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Library rejected an argument; maps to exit code 1.
class UsageFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check(gsm_status status) {
    switch (status) {
        case GSM_OK: return;
        case GSM_ERROR_DOMAIN:
        case GSM_ERROR_CONTRACT: throw UsageFailure(gsm_last_error());
        default: throw NumericFailure(gsm_last_error());
    }
}

std::string meta_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string params_line(const gsm_params& p) {
    return "params: alpha=" + meta_num(p.alpha) + " beta=" + meta_num(p.beta) +
           " gammaE1=" + meta_num(p.gamma_e1) + " gammaS1=" + meta_num(p.gamma_s1) +
           " eta=" + meta_num(p.eta) + " mu=" + meta_num(p.mu);
}

std::string solver_line(const gsm_solver_config& s) {
    return "solver: n=" + std::to_string(s.grid_n) + " dt=" + meta_num(s.dt) +
           " newton_tol=" + meta_num(s.newton_tol) +
           " newton_max_iters=" + std::to_string(s.newton_max_iters) +
           " steady_tol=" + meta_num(s.steady_tol) + " damping_min=" + meta_num(s.damping_min);
}

std::vector<std::string> artifact_metadata(const std::string& subcommand, const RunConfig& cfg) {
    std::vector<std::string> meta{"gsm " + subcommand, params_line(cfg.params),
                                  solver_line(cfg.solver)};
    if (cfg.from_dimensional) {
        meta.insert(meta.begin() + 1, "dimensionless values derived from a dimensional block");
    }
    return meta;
}

using FieldHandle = std::unique_ptr<gsm_field, decltype(&gsm_field_free)>;

struct FieldArrayHandle {
    gsm_field** fields = nullptr;
    size_t count = 0;
    ~FieldArrayHandle() { gsm_field_array_free(fields, count); }
};

struct FieldBuffers {
    std::vector<double> x, u, v, w;

    explicit FieldBuffers(const gsm_field* f) {
        const size_t n = gsm_field_size(f);
        x.resize(n);
        u.resize(n);
        v.resize(n);
        w.resize(n);
        check(gsm_field_values(f, x.data(), u.data(), v.data(), w.data()));
    }
};

void plot_species_profiles(const std::string& path, const FieldBuffers& f,
                           const std::string& title, const std::vector<std::string>& meta) {
    std::vector<SvgSeries> series(3);
    series[0] = {"u", f.x, f.u};
    series[1] = {"v", f.x, f.v};
    series[2] = {"w", f.x, f.w};
    write_svg_file(path, series, SvgAxes{title, "X", "concentration"}, meta);
}

int do_steady(const RunConfig& cfg, const std::string& out_csv, const std::string& out_svg) {
    gsm_field* raw = nullptr;
    check(gsm_solve_steady(&cfg.params, &cfg.solver, &raw));
    const FieldHandle field(raw, gsm_field_free);
    const FieldBuffers buffers(field.get());
    double residual = 0.0;
    check(gsm_residual_norm(field.get(), &cfg.params, &residual));

    CsvDocument doc;
    doc.comments = artifact_metadata("steady", cfg);
    doc.columns = {"X", "u", "v", "w"};
    for (size_t i = 0; i < buffers.x.size(); ++i) {
        doc.rows.push_back({buffers.x[i], buffers.u[i], buffers.v[i], buffers.w[i]});
    }
    write_csv_file(out_csv, doc);
    if (!out_svg.empty()) {
        plot_species_profiles(out_svg, buffers, "steady concentration profiles", doc.comments);
    }

    std::cout << "steady: " << params_line(cfg.params) << " n=" << cfg.solver.grid_n
              << " residual=" << format_number(residual) << " wrote " << out_csv
              << (out_svg.empty() ? "" : " " + out_svg) << "\n";
    return 0;
}

int do_transient(const RunConfig& cfg, double tau_end, std::vector<double> samples,
                 const std::string& out_csv) {
    if (samples.empty()) samples = {0.0, tau_end};

    FieldArrayHandle fields;
    int reached_steady = 0;
    check(gsm_solve_transient(&cfg.params, &cfg.solver, tau_end, samples.data(), samples.size(),
                              &fields.fields, &reached_steady));
    fields.count = samples.size();
    double final_rate = 0.0;
    check(gsm_residual_norm(fields.fields[samples.size() - 1], &cfg.params, &final_rate));

    CsvDocument doc;
    doc.comments = artifact_metadata("transient", cfg);
    doc.comments.push_back("tau_end=" + meta_num(tau_end) +
                           (reached_steady ? " (steady state reached early)" : ""));
    doc.columns = {"tau", "X", "u", "v", "w"};
    for (size_t s = 0; s < samples.size(); ++s) {
        const FieldBuffers buffers(fields.fields[s]);
        const double tau = gsm_field_tau(fields.fields[s]);
        for (size_t i = 0; i < buffers.x.size(); ++i) {
            doc.rows.push_back({tau, buffers.x[i], buffers.u[i], buffers.v[i], buffers.w[i]});
        }
    }
    write_csv_file(out_csv, doc);

    std::cout << "transient: " << params_line(cfg.params) << " tau_end=" << format_number(tau_end)
              << " samples=" << samples.size() << " final_rate=" << format_number(final_rate)
              << (reached_steady ? " steady=yes" : "") << " wrote " << out_csv << "\n";
    return 0;
}

int do_closed_form(const RunConfig& cfg, const std::string& method, double tau,
                   const std::string& out_csv) {
    const int n = cfg.solver.grid_n;
    CsvDocument doc;
    doc.comments = artifact_metadata("closed-form " + method, cfg);

    gsm_closed_form_coefficients coeffs{};
    check(gsm_closed_form_coefficients_compute(&cfg.params, 1e-12, &coeffs));
    std::string summary_extra;
    if (method == "agm") {
        doc.comments.push_back("agm: m=" + meta_num(coeffs.m) + " k=" + meta_num(coeffs.k));
        summary_extra = " m=" + format_number(coeffs.m);
    } else {
        doc.comments.push_back("k=" + meta_num(coeffs.k) + " sqrt_k=" + meta_num(coeffs.sqrt_k));
    }
    if (method == "vim-transient") {
        doc.comments.push_back("tau=" + meta_num(tau));
        summary_extra = " tau=" + format_number(tau);
    }

    doc.columns = {"X", "u", "v", "w"};
    for (int i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(n - 1);
        double u = 0.0, v = 0.0, w = 0.0;
        if (method == "vim-transient") {
            check(gsm_vim_profile(&cfg.params, x, tau, &u, &v, &w));
        } else {
            const int route = (method == "agm") ? GSM_CLOSED_FORM_AGM : GSM_CLOSED_FORM_VIM;
            check(gsm_closed_form_profile(&cfg.params, route, x, &u, &v, &w));
        }
        doc.rows.push_back({x, u, v, w});
    }
    write_csv_file(out_csv, doc);

    std::cout << "closed-form " << method << ": " << params_line(cfg.params) << summary_extra
              << " wrote " << out_csv << "\n";
    return 0;
}

int do_tables(int which, const std::string& out_csv) {
    gsm_solver_config solver;
    gsm_solver_config_defaults(&solver);

    gsm_table* raw = nullptr;
    check(gsm_reproduce_table(which, &solver, &raw));
    const std::unique_ptr<gsm_table, decltype(&gsm_table_free)> table(raw, gsm_table_free);

    CsvDocument doc;
    doc.comments = {"gsm tables --which " + std::to_string(which), solver_line(solver)};
    const size_t scenarios = gsm_table_scenario_count(table.get());
    for (size_t s = 0; s < scenarios; ++s) {
        gsm_params params{};
        int qualitative = 0;
        check(gsm_table_scenario(table.get(), s, &params, &qualitative));
        doc.comments.push_back("scenario " + std::to_string(s + 1) + ": " + params_line(params) +
                               (qualitative ? " (qualitative only)" : ""));
    }
    doc.columns = {"X", "numerical", "vim", "agm", "dev_vim", "dev_agm"};
    for (size_t s = 0; s < scenarios; ++s) {
        for (size_t r = 0; r < gsm_table_row_count(table.get(), s); ++r) {
            double cols[6];
            check(gsm_table_row(table.get(), s, r, cols));
            doc.rows.push_back({cols[0], cols[1], cols[2], cols[3], cols[4], cols[5]});
        }
        double mean_vim = 0.0, mean_agm = 0.0;
        check(gsm_table_means(table.get(), s, &mean_vim, &mean_agm));
        doc.rows.push_back({std::string("mean"), std::string(), std::string(), std::string(),
                            mean_vim, mean_agm});
    }
    write_csv_file(out_csv, doc);

    std::cout << "tables: which=" << which << " scenarios=" << scenarios << " wrote " << out_csv
              << "\n";
    return 0;
}

int species_code(const std::string& species) {
    if (species == "u") return GSM_SPECIES_GLUCOSE;
    if (species == "v") return GSM_SPECIES_OXYGEN;
    return GSM_SPECIES_GLUCONIC_ACID;
}

int do_sweep(const RunConfig& cfg, const std::string& param, const std::vector<double>& values,
             const std::string& species, const std::string& out_csv,
             const std::string& out_svg) {
    gsm_sweep* raw = nullptr;
    check(gsm_profile_sweep(species_code(species), param.c_str(), values.data(), values.size(),
                            &cfg.params, static_cast<size_t>(cfg.solver.grid_n), &raw));
    const std::unique_ptr<gsm_sweep, decltype(&gsm_sweep_free)> sweep(raw, gsm_sweep_free);

    const size_t resolution = gsm_sweep_resolution(sweep.get());
    const size_t count = gsm_sweep_series_count(sweep.get());
    std::vector<double> x(resolution);
    check(gsm_sweep_x(sweep.get(), x.data()));

    CsvDocument doc;
    doc.comments = artifact_metadata("sweep", cfg);
    doc.comments.push_back("sweep: species=" + species + " parameter=" + param);
    doc.columns = {"X"};
    std::vector<std::vector<double>> ys(count, std::vector<double>(resolution));
    std::vector<SvgSeries> svg_series;
    for (size_t s = 0; s < count; ++s) {
        const char* name = nullptr;
        double value = 0.0;
        check(gsm_sweep_series(sweep.get(), s, &name, &value, ys[s].data()));
        doc.columns.push_back(name);
        svg_series.push_back({name, x, ys[s]});
    }

    for (size_t i = 0; i < resolution; ++i) {
        CsvRow row{x[i]};
        for (size_t s = 0; s < count; ++s) row.push_back(ys[s][i]);
        doc.rows.push_back(std::move(row));
    }
    write_csv_file(out_csv, doc);
    if (!out_svg.empty()) {
        write_svg_file(out_svg, svg_series,
                       SvgAxes{"closed-form " + species + " profiles vs " + param, "X", species},
                       doc.comments);
    }

    std::cout << "sweep: species=" << species << " parameter=" << param
              << " series=" << count << " wrote " << out_csv
              << (out_svg.empty() ? "" : " " + out_svg) << "\n";
    return 0;
}

int do_sensitivity(const RunConfig& cfg, const std::string& target, double delta,
                   const std::string& out_csv) {
    gsm_sensitivity* raw = nullptr;
    check(gsm_sensitivity_analysis(species_code(target), &cfg.params, &cfg.solver, delta,
                                   GSM_FUNCTIONAL_VALUE_AT_CENTER, &raw));
    const std::unique_ptr<gsm_sensitivity, decltype(&gsm_sensitivity_free)> report(
        raw, gsm_sensitivity_free);

    CsvDocument doc;
    doc.comments = artifact_metadata("sensitivity", cfg);
    doc.comments.push_back("sensitivity: target=" + target + " delta=" + meta_num(delta) +
                           " functional=value_at_center");
    doc.columns = {"parameter", "share_percent"};
    for (size_t i = 0; i < gsm_sensitivity_count(report.get()); ++i) {
        const char* name = nullptr;
        double sensitivity = 0.0, share = 0.0;
        int failed = 0;
        check(gsm_sensitivity_entry(report.get(), i, &name, &sensitivity, &share, &failed));
        if (failed) {
            doc.rows.push_back({std::string(name), std::string("failed")});
        } else {
            doc.rows.push_back({std::string(name), share});
        }
    }
    write_csv_file(out_csv, doc);

    std::cout << "sensitivity: target=" << target << " delta=" << format_number(delta)
              << " wrote " << out_csv << "\n";
    return 0;
}

}  // namespace

int run_command(int argc, const char* const* argv) {
    CLI::App app{"glucose-sensitive membrane transport simulator"};
    app.require_subcommand(1);

    std::string config_path, out_csv, out_svg, method, species, param;
    std::vector<double> samples, values;
    double tau_end = 0.0, tau = 0.0, delta = 0.01, dt = 0.0;
    int grid_n = 0, which = 0;

    CLI::App* steady = app.add_subcommand("steady", "solve the steady transport system");
    steady->add_option("--config", config_path, "JSON run configuration")->required();
    steady->add_option("--grid", grid_n, "override the grid point count");
    steady->add_option("--out", out_csv, "output CSV path (falls back to the config output block)");
    steady->add_option("--plot", out_svg, "optional SVG line chart");

    CLI::App* transient = app.add_subcommand("transient", "integrate from the initial profile");
    transient->add_option("--config", config_path)->required();
    transient->add_option("--tau-end", tau_end, "end time")->required();
    transient->add_option("--dt", dt, "override the implicit Euler step");
    transient->add_option("--samples", samples,
                          "sample times, comma separated (default: 0 and tau-end)")
        ->delimiter(',');
    transient->add_option("--out", out_csv);

    CLI::App* closed = app.add_subcommand("closed-form", "evaluate the analytic profiles");
    closed->add_option("--method", method, "agm, vim-steady or vim-transient")
        ->required()
        ->check(CLI::IsMember({"agm", "vim-steady", "vim-transient"}));
    closed->add_option("--config", config_path)->required();
    closed->add_option("--tau", tau, "time for vim-transient");
    closed->add_option("--out", out_csv);

    CLI::App* tables = app.add_subcommand("tables", "numerical vs closed-form validation tables");
    tables->add_option("--which", which, "table id")->required()->check(CLI::Range(1, 3));
    tables->add_option("--out", out_csv)->required();

    CLI::App* sweep = app.add_subcommand("sweep", "closed-form profiles over a parameter range");
    sweep->add_option("--param", param, "alpha, beta, gammaE1, gammaS1, eta, mu or k")
        ->required();
    sweep->add_option("--values", values, "parameter values, comma separated")
        ->required()
        ->delimiter(',');
    sweep->add_option("--config", config_path)->required();
    sweep->add_option("--species", species)->required()->check(CLI::IsMember({"u", "v", "w"}));
    sweep->add_option("--out", out_csv);
    sweep->add_option("--plot", out_svg);

    CLI::App* sensitivity = app.add_subcommand("sensitivity", "parameter influence shares");
    sensitivity->add_option("--config", config_path)->required();
    sensitivity->add_option("--target", species)->required()
        ->check(CLI::IsMember({"u", "v", "w"}));
    sensitivity->add_option("--delta", delta, "relative perturbation, in (0, 0.1]");
    sensitivity->add_option("--out", out_csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (tables->parsed()) return do_tables(which, out_csv);

        RunConfig cfg = load_config_file(config_path);
        if (!out_csv.empty()) cfg.out_csv = out_csv;
        if (!out_svg.empty()) cfg.out_svg = out_svg;
        if (cfg.out_csv.empty()) throw ConfigError("no output CSV path given");

        if (steady->parsed()) {
            if (grid_n > 0) cfg.solver.grid_n = grid_n;
            return do_steady(cfg, cfg.out_csv, cfg.out_svg);
        }
        if (transient->parsed()) {
            if (dt > 0.0) cfg.solver.dt = dt;
            return do_transient(cfg, tau_end, samples, cfg.out_csv);
        }
        if (closed->parsed()) return do_closed_form(cfg, method, tau, cfg.out_csv);
        if (sweep->parsed()) return do_sweep(cfg, param, values, species, cfg.out_csv, cfg.out_svg);
        if (sensitivity->parsed()) return do_sensitivity(cfg, species, delta, cfg.out_csv);
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 2;
    } catch (const NumericFailure& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gsm::cli
