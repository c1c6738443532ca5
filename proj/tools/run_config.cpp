#include "run_config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace gsm::cli {

namespace {

using nlohmann::json;

double number_field(const json& block, const std::string& block_name, const std::string& key) {
    if (!block.contains(key)) {
        throw ConfigError(block_name + " block is missing field '" + key + "'");
    }
    const json& value = block.at(key);
    if (!value.is_number()) {
        throw ConfigError(block_name + "." + key + " must be a number");
    }
    return value.get<double>();
}

void check_known_keys(const json& block, const std::string& block_name,
                      std::initializer_list<const char*> known) {
    for (const auto& [key, value] : block.items()) {
        (void)value;
        const bool ok =
            std::any_of(known.begin(), known.end(), [&](const char* k) { return key == k; });
        if (!ok) throw ConfigError("unknown field '" + key + "' in " + block_name + " block");
    }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    check_known_keys(doc, "top-level", {"dimensionless", "dimensional", "solver", "output"});

    const bool has_dimensionless = doc.contains("dimensionless");
    const bool has_dimensional = doc.contains("dimensional");
    if (has_dimensionless == has_dimensional) {
        throw ConfigError(
            "config must contain exactly one of the 'dimensionless' and 'dimensional' blocks");
    }

    RunConfig cfg;
    if (has_dimensionless) {
        const json& block = doc.at("dimensionless");
        check_known_keys(block, "dimensionless",
                         {"alpha", "beta", "gammaE1", "gammaS1", "eta", "mu"});
        cfg.params.alpha = number_field(block, "dimensionless", "alpha");
        cfg.params.beta = number_field(block, "dimensionless", "beta");
        cfg.params.gamma_e1 = number_field(block, "dimensionless", "gammaE1");
        cfg.params.gamma_s1 = number_field(block, "dimensionless", "gammaS1");
        cfg.params.eta = number_field(block, "dimensionless", "eta");
        cfg.params.mu = number_field(block, "dimensionless", "mu");
    } else {
        const json& block = doc.at("dimensional");
        check_known_keys(block, "dimensional",
                         {"C_g_star", "C_ox_star", "D_g", "D_ox", "D_a", "K_g", "K_ox", "V_max",
                          "l"});
        cfg.from_dimensional = true;
        cfg.dimensional.c_g_star = number_field(block, "dimensional", "C_g_star");
        cfg.dimensional.c_ox_star = number_field(block, "dimensional", "C_ox_star");
        cfg.dimensional.d_g = number_field(block, "dimensional", "D_g");
        cfg.dimensional.d_ox = number_field(block, "dimensional", "D_ox");
        cfg.dimensional.d_a = number_field(block, "dimensional", "D_a");
        cfg.dimensional.k_g = number_field(block, "dimensional", "K_g");
        cfg.dimensional.k_ox = number_field(block, "dimensional", "K_ox");
        cfg.dimensional.v_max = number_field(block, "dimensional", "V_max");
        cfg.dimensional.half_thickness = number_field(block, "dimensional", "l");
        if (gsm_nondimensionalize(&cfg.dimensional, &cfg.params) != GSM_OK) {
            throw ConfigError(gsm_last_error());
        }
    }

    gsm_solver_config_defaults(&cfg.solver);
    if (doc.contains("solver")) {
        const json& block = doc.at("solver");
        check_known_keys(block, "solver",
                         {"n", "dt", "newton_tol", "newton_max_iters", "steady_tol",
                          "damping_min"});
        if (block.contains("n")) cfg.solver.grid_n = static_cast<int>(number_field(block, "solver", "n"));
        if (block.contains("dt")) cfg.solver.dt = number_field(block, "solver", "dt");
        if (block.contains("newton_tol")) {
            cfg.solver.newton_tol = number_field(block, "solver", "newton_tol");
        }
        if (block.contains("newton_max_iters")) {
            cfg.solver.newton_max_iters =
                static_cast<int>(number_field(block, "solver", "newton_max_iters"));
        }
        if (block.contains("steady_tol")) {
            cfg.solver.steady_tol = number_field(block, "solver", "steady_tol");
        }
        if (block.contains("damping_min")) {
            cfg.solver.damping_min = number_field(block, "solver", "damping_min");
        }
    }

    if (doc.contains("output")) {
        const json& block = doc.at("output");
        check_known_keys(block, "output", {"csv", "svg"});
        if (block.contains("csv")) cfg.out_csv = block.at("csv").get<std::string>();
        if (block.contains("svg")) cfg.out_svg = block.at("svg").get<std::string>();
    }

    // dimensionless invariants, reported with the offending field name
    if (has_dimensionless) {
        const auto positive = [](double v, const char* name) {
            if (!(v > 0.0)) throw ConfigError(std::string(name) + " must be positive");
        };
        const auto nonnegative = [](double v, const char* name) {
            if (!(v >= 0.0)) throw ConfigError(std::string(name) + " must be nonnegative");
        };
        positive(cfg.params.alpha, "alpha");
        positive(cfg.params.beta, "beta");
        nonnegative(cfg.params.gamma_e1, "gammaE1");
        nonnegative(cfg.params.gamma_s1, "gammaS1");
        positive(cfg.params.eta, "eta");
        positive(cfg.params.mu, "mu");
    }
    if (cfg.solver.grid_n < 3) throw ConfigError("solver.n must be at least 3");
    if (!(cfg.solver.dt > 0.0)) throw ConfigError("solver.dt must be positive");
    if (!(cfg.solver.newton_tol > 0.0)) throw ConfigError("solver.newton_tol must be positive");
    if (cfg.solver.newton_max_iters < 1) {
        throw ConfigError("solver.newton_max_iters must be at least 1");
    }
    if (!(cfg.solver.steady_tol > 0.0)) throw ConfigError("solver.steady_tol must be positive");
    if (!(cfg.solver.damping_min > 0.0 && cfg.solver.damping_min <= 1.0)) {
        throw ConfigError("solver.damping_min must lie in (0, 1]");
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot read config file: " + path);
    std::ostringstream text;
    text << file.rdbuf();
    return parse_config(text.str());
}

}  // namespace gsm::cli
