#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ehscn/params.hpp"

namespace ehscn {

/// Raised on any problem with a config file or key/value assignment; the
/// message names the offending key and, for file input, the line number.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a flat key=value config file. Blank lines and lines starting
/// with '#' are ignored. Unset keys keep their defaults. Recognized keys:
///
///   lambda_s, lambda_m, lambda_ratio, beta, p_m_dbm, p_s_dbm, eta,
///   n0_dbm, theta_t_db, p_eps_dbm, alpha_near, alpha_far, d_c_m,
///   pathloss_mode, region_radius_m, n_trials, seed, association
///
/// lambda_ratio sets lambda_m = lambda_s / ratio and cannot be combined
/// with an explicit lambda_m. pathloss_mode=single requires equal
/// exponents; if only one of alpha_near/alpha_far is given in single mode
/// the other follows it, and if neither is given both take the far-slope
/// default.
SimParams parse_config_file(const std::string& path);

/// Same, from an in-memory string.
SimParams parse_config_text(std::string_view text);

/// Applies one key=value assignment to existing params (used by overrides
/// and the library API). No cross-key resolution: values are taken as-is.
void apply_key_value(SimParams& params, std::string_view key,
                     std::string_view value);

/// Current value of one key, formatted so that parsing it back recovers
/// the exact value.
std::string get_key_value(const SimParams& params, std::string_view key);

/// All config keys in canonical order (lambda_ratio excluded: it is an
/// input-only alias for lambda_m).
const std::vector<std::string>& config_keys();

/// Fully resolved key=value text for params; parse_config_text of the
/// result reproduces params exactly.
std::string serialize_config(const SimParams& params);

} // namespace ehscn
