#ifndef GSM_CLI_RUN_CONFIG_HPP
#define GSM_CLI_RUN_CONFIG_HPP

#include <stdexcept>
#include <string>

#include "gsm.h"

namespace gsm::cli {

/// Configuration or schema problem in a run-config document.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A validated run configuration. Exactly one of the dimensionless /
/// dimensional parameter blocks must be present in the JSON document; a
/// dimensional block is reduced immediately and both forms are kept so the
/// derived values can be echoed in artifact metadata.
struct RunConfig {
    gsm_params params{};
    bool from_dimensional = false;
    gsm_dimensional_params dimensional{};
    gsm_solver_config solver{};  ///< defaults applied for absent fields
    std::string out_csv;         ///< optional default output paths
    std::string out_svg;
};

/// Parses and validates a JSON run-config document.
///
/// {
///   "dimensionless": {"alpha": .., "beta": .., "gammaE1": .., "gammaS1": ..,
///                     "eta": .., "mu": ..},
///   -- or --
///   "dimensional":   {"C_g_star": .., "C_ox_star": .., "D_g": .., "D_ox": ..,
///                     "D_a": .., "K_g": .., "K_ox": .., "V_max": .., "l": ..},
///   "solver": {"n": 201, "dt": 1e-3, "newton_tol": 1e-10,
///              "newton_max_iters": 50, "steady_tol": 1e-8,
///              "damping_min": 0.015625},          // optional, all fields optional
///   "output": {"csv": "path", "svg": "path"}      // optional
/// }
///
/// Throws ConfigError with the parse position for malformed JSON, for a
/// missing/duplicated parameter block, and with the field name for invariant
/// violations.
RunConfig parse_config(const std::string& json_text);

/// Reads the file and parses it. Throws ConfigError if unreadable.
RunConfig load_config_file(const std::string& path);

}  // namespace gsm::cli

#endif  // GSM_CLI_RUN_CONFIG_HPP
