#include "ehscn/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace ehscn {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
    const std::string v(value);
    if (v.empty())
        throw config_error("empty value for key '" + std::string(key) + "'");
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || errno == ERANGE)
        throw config_error("cannot parse value '" + v + "' for key '" +
                           std::string(key) + "'");
    return x;
}

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
    const std::string v(value);
    if (v.empty() || v.front() == '-')
        throw config_error("value for key '" + std::string(key) +
                           "' must be a non-negative integer");
    errno = 0;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || errno == ERANGE)
        throw config_error("cannot parse value '" + v + "' for key '" +
                           std::string(key) + "'");
    return static_cast<std::uint64_t>(x);
}

void check_range(std::string_view key, bool ok) {
    if (!ok)
        throw config_error("value out of range for key '" + std::string(key) +
                           "'");
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

void apply_key_value(SimParams& params, std::string_view key,
                     std::string_view value) {
    if (key == "lambda_s") {
        const double x = parse_double(key, value);
        check_range(key, x >= 0.0);
        params.lambda_s = x;
    } else if (key == "lambda_m") {
        const double x = parse_double(key, value);
        check_range(key, x >= 0.0);
        params.lambda_m = x;
    } else if (key == "lambda_ratio") {
        // alias: lambda_m follows the current lambda_s
        const double x = parse_double(key, value);
        check_range(key, x > 0.0);
        params.lambda_m = params.lambda_s / x;
    } else if (key == "beta") {
        const double x = parse_double(key, value);
        check_range(key, x >= 0.0 && x <= 1.0);
        params.beta = x;
    } else if (key == "p_m_dbm") {
        params.p_m_dbm = parse_double(key, value);
    } else if (key == "p_s_dbm") {
        params.p_s_dbm = parse_double(key, value);
    } else if (key == "eta") {
        const double x = parse_double(key, value);
        check_range(key, x > 0.0 && x <= 1.0);
        params.eta = x;
    } else if (key == "n0_dbm") {
        params.n0_dbm = parse_double(key, value);
    } else if (key == "theta_t_db") {
        params.theta_t_db = parse_double(key, value);
    } else if (key == "p_eps_dbm") {
        params.p_eps_dbm = parse_double(key, value);
    } else if (key == "alpha_near") {
        const double x = parse_double(key, value);
        check_range(key, x >= 0.0);
        params.path_loss.alpha_near = x;
    } else if (key == "alpha_far") {
        const double x = parse_double(key, value);
        check_range(key, x >= 0.0);
        params.path_loss.alpha_far = x;
    } else if (key == "d_c_m") {
        const double x = parse_double(key, value);
        check_range(key, x > 0.0);
        params.path_loss.critical_distance_m = x;
    } else if (key == "pathloss_mode") {
        if (value == "dual")
            params.path_loss.mode = PathLossMode::dual;
        else if (value == "single")
            params.path_loss.mode = PathLossMode::single;
        else
            throw config_error("pathloss_mode must be 'dual' or 'single'");
    } else if (key == "region_radius_m") {
        const double x = parse_double(key, value);
        check_range(key, x > 0.0);
        params.region.radius_m = x;
    } else if (key == "n_trials") {
        const std::uint64_t x = parse_uint(key, value);
        check_range(key, x >= 1);
        params.n_trials = x;
    } else if (key == "seed") {
        params.seed = parse_uint(key, value);
    } else if (key == "association") {
        if (value == "nearest_any")
            params.association = Association::nearest_any;
        else if (value == "offgrid_only")
            params.association = Association::offgrid_only;
        else
            throw config_error(
                "association must be 'nearest_any' or 'offgrid_only'");
    } else {
        throw config_error("unknown key '" + std::string(key) + "'");
    }
}

std::string get_key_value(const SimParams& params, std::string_view key) {
    if (key == "lambda_s")
        return format_double(params.lambda_s);
    if (key == "lambda_m")
        return format_double(params.lambda_m);
    if (key == "beta")
        return format_double(params.beta);
    if (key == "p_m_dbm")
        return format_double(params.p_m_dbm);
    if (key == "p_s_dbm")
        return format_double(params.p_s_dbm);
    if (key == "eta")
        return format_double(params.eta);
    if (key == "n0_dbm")
        return format_double(params.n0_dbm);
    if (key == "theta_t_db")
        return format_double(params.theta_t_db);
    if (key == "p_eps_dbm")
        return format_double(params.p_eps_dbm);
    if (key == "alpha_near")
        return format_double(params.path_loss.alpha_near);
    if (key == "alpha_far")
        return format_double(params.path_loss.alpha_far);
    if (key == "d_c_m")
        return format_double(params.path_loss.critical_distance_m);
    if (key == "pathloss_mode")
        return params.path_loss.mode == PathLossMode::dual ? "dual" : "single";
    if (key == "region_radius_m")
        return format_double(params.region.radius_m);
    if (key == "n_trials")
        return std::to_string(params.n_trials);
    if (key == "seed")
        return std::to_string(params.seed);
    if (key == "association")
        return params.association == Association::nearest_any ? "nearest_any"
                                                              : "offgrid_only";
    throw config_error("unknown key '" + std::string(key) + "'");
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "lambda_s",   "lambda_m",    "beta",
        "p_m_dbm",    "p_s_dbm",     "eta",
        "n0_dbm",     "theta_t_db",  "p_eps_dbm",
        "alpha_near", "alpha_far",   "d_c_m",
        "pathloss_mode", "region_radius_m", "n_trials",
        "seed",       "association"};
    return keys;
}

SimParams parse_config_text(std::string_view text) {
    SimParams params;
    bool saw_lambda_m = false;
    bool saw_lambda_ratio = false;
    bool saw_alpha_near = false;
    bool saw_alpha_far = false;
    double lambda_ratio = 0.0;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw config_error("line " + std::to_string(line_no) +
                               ": expected key=value, got '" +
                               std::string(line) + "'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error("line " + std::to_string(line_no) +
                               ": missing key");
        try {
            if (key == "lambda_ratio") {
                lambda_ratio = parse_double(key, value);
                check_range(key, lambda_ratio > 0.0);
                saw_lambda_ratio = true;
            } else {
                apply_key_value(params, key, value);
                if (key == "lambda_m")
                    saw_lambda_m = true;
                else if (key == "alpha_near")
                    saw_alpha_near = true;
                else if (key == "alpha_far")
                    saw_alpha_far = true;
            }
        } catch (const config_error& e) {
            throw config_error("line " + std::to_string(line_no) + ": " +
                               e.what());
        }
    }

    if (saw_lambda_ratio) {
        if (saw_lambda_m)
            throw config_error(
                "lambda_m and lambda_ratio are mutually exclusive");
        params.lambda_m = params.lambda_s / lambda_ratio;
    }

    if (params.path_loss.mode == PathLossMode::single) {
        if (saw_alpha_near && saw_alpha_far &&
            params.path_loss.alpha_near != params.path_loss.alpha_far)
            throw config_error(
                "pathloss_mode=single requires alpha_near == alpha_far");
        if (saw_alpha_near && !saw_alpha_far)
            params.path_loss.alpha_far = params.path_loss.alpha_near;
        else if (!saw_alpha_near)
            params.path_loss.alpha_near = params.path_loss.alpha_far;
    }

    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    return params;
}

SimParams parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string serialize_config(const SimParams& params) {
    std::string out;
    for (const std::string& key : config_keys()) {
        out += key;
        out += '=';
        out += get_key_value(params, key);
        out += '\n';
    }
    return out;
}

} // namespace ehscn
