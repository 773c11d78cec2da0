// ehscn command-line front end. Talks to the simulator exclusively through
// the public C API (ehscn.h); all output is plain CSV plus a sidecar
// manifest that records the fully resolved configuration of the run.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ehscn.h"

namespace {

constexpr size_t kErrLen = 512;

struct ParamsHandle {
    ehscn_params* p = nullptr;
    ~ParamsHandle() { ehscn_params_free(p); }
    ParamsHandle() = default;
    ParamsHandle(const ParamsHandle&) = delete;
    ParamsHandle& operator=(const ParamsHandle&) = delete;
};

struct SweepHandle {
    ehscn_sweep* s = nullptr;
    ~SweepHandle() { ehscn_sweep_free(s); }
    SweepHandle() = default;
    SweepHandle(const SweepHandle&) = delete;
    SweepHandle& operator=(const SweepHandle&) = delete;
    SweepHandle(SweepHandle&& other) noexcept : s(other.s) { other.s = nullptr; }
    SweepHandle& operator=(SweepHandle&& other) noexcept {
        if (this != &other) {
            ehscn_sweep_free(s);
            s = other.s;
            other.s = nullptr;
        }
        return *this;
    }
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string get_key(const ehscn_params* p, const char* key) {
    char buf[128];
    if (ehscn_params_get(p, key, buf, sizeof(buf)) != EHSCN_OK)
        return "?";
    return buf;
}

[[noreturn]] void fail(int code, const std::string& msg) {
    std::cerr << "ehscn: " << msg << "\n";
    std::exit(code);
}

void set_or_fail(ehscn_params* p, const char* key, const std::string& value) {
    char err[kErrLen];
    if (ehscn_params_set(p, key, value.c_str(), err, sizeof(err)) != EHSCN_OK)
        fail(1, std::string("config error: ") + err);
}

// Grid syntax: "a:b:step" (inclusive), "log:a:b:n", or "v1,v2,...".
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    auto to_double = [](const std::string& s) {
        char* end = nullptr;
        const double x = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size() || s.empty())
            fail(1, "cannot parse grid value '" + s + "'");
        return x;
    };
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        size_t pos = 0;
        while (true) {
            const size_t next = s.find(sep, pos);
            parts.push_back(s.substr(pos, next - pos));
            if (next == std::string::npos)
                break;
            pos = next + 1;
        }
        return parts;
    };

    if (spec.rfind("log:", 0) == 0) {
        const auto parts = split(spec.substr(4), ':');
        if (parts.size() != 3)
            fail(1, "log grid must be log:lo:hi:count");
        const double lo = to_double(parts[0]);
        const double hi = to_double(parts[1]);
        const long n = std::lround(to_double(parts[2]));
        if (!(lo > 0.0) || !(hi > lo) || n < 2)
            fail(1, "bad log grid bounds");
        const double step = std::log10(hi / lo) / static_cast<double>(n - 1);
        for (long i = 0; i < n; ++i)
            grid.push_back(lo * std::pow(10.0, step * static_cast<double>(i)));
        grid.back() = hi;
        return grid;
    }
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3)
            fail(1, "range grid must be lo:hi:step");
        const double lo = to_double(parts[0]);
        const double hi = to_double(parts[1]);
        const double step = to_double(parts[2]);
        if (!(step > 0.0) || !(hi >= lo))
            fail(1, "bad range grid bounds");
        const long n = std::lround((hi - lo) / step);
        for (long i = 0; i <= n; ++i)
            grid.push_back(lo + step * static_cast<double>(i));
        grid.back() = hi;
        return grid;
    }
    for (const auto& part : split(spec, ','))
        grid.push_back(to_double(part));
    return grid;
}

std::vector<double> preset_or_fail(const std::string& name) {
    const size_t n = ehscn_preset_grid(name.c_str(), nullptr, 0);
    if (n == 0)
        fail(1, "unknown preset '" + name + "'");
    std::vector<double> grid(n);
    ehscn_preset_grid(name.c_str(), grid.data(), n);
    return grid;
}

std::string timestamp_utc() {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file_or_fail(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
        out.close();
        std::remove(path.c_str());
        fail(2, "cannot write output file '" + path + "'");
    }
}

void write_manifest(const std::string& csv_path, const ehscn_params* p,
                    const std::string& subcommand, const std::string& detail,
                    uint64_t n_failed_total) {
    std::string text;
    text += "# ehscn run manifest\n";
    text += std::string("# version=") + ehscn_version() + "\n";
    text += "# subcommand=" + subcommand + "\n";
    if (!detail.empty())
        text += "# " + detail + "\n";
    text += "# timestamp=" + timestamp_utc() + "\n";
    text += "# n_failed_total=" + std::to_string(n_failed_total) + "\n";
    text += "# resolved configuration (key=value, parseable as --config):\n";
    const int n_keys = ehscn_params_key_count();
    for (int i = 0; i < n_keys; ++i) {
        const char* key = ehscn_params_key_name(i);
        text += std::string(key) + "=" + get_key(p, key) + "\n";
    }
    write_file_or_fail(csv_path + ".manifest", text);
}

const char* kPointHeader =
    "outage_mean,outage_ci_lo,outage_ci_hi,ee_mean,ee_ci_lo,ee_ci_hi,"
    "n_trials,n_failed";

std::string point_row(const ehscn_point_result& r) {
    return fmt(r.outage_mean) + "," + fmt(r.outage_ci_lo) + "," +
           fmt(r.outage_ci_hi) + "," + fmt(r.ee_mean) + "," +
           fmt(r.ee_ci_lo) + "," + fmt(r.ee_ci_hi) + "," +
           std::to_string(r.n_trials) + "," + std::to_string(r.n_failed);
}

ehscn_point_result estimate_or_fail(const ehscn_params* p, int threads) {
    char err[kErrLen];
    ehscn_point_result r{};
    const ehscn_status st = ehscn_estimate(p, threads, &r, err, sizeof(err));
    if (st == EHSCN_ERR_CONFIG)
        fail(1, std::string("config error: ") + err);
    if (st != EHSCN_OK)
        fail(2, std::string("runtime error: ") + err);
    return r;
}

SweepHandle sweep_or_fail(SweepHandle&& handle, const ehscn_params* p,
                          ehscn_sweep_param param,
                          const std::vector<double>& grid, bool couple,
                          double ratio, int threads) {
    char err[kErrLen];
    const ehscn_status st =
        ehscn_sweep_run(p, param, grid.data(), grid.size(), couple ? 1 : 0,
                        ratio, threads, &handle.s, err, sizeof(err));
    if (st == EHSCN_ERR_CONFIG)
        fail(1, std::string("config error: ") + err);
    if (st != EHSCN_OK)
        fail(2, std::string("runtime error: ") + err);
    return std::move(handle);
}

uint64_t append_sweep_rows(std::string& csv, const ehscn_sweep* sweep,
                           const std::string& row_prefix) {
    uint64_t n_failed = 0;
    const size_t n = ehscn_sweep_size(sweep);
    for (size_t i = 0; i < n; ++i) {
        double value = 0.0;
        ehscn_point_result r{};
        ehscn_sweep_point(sweep, i, &value, &r);
        csv += row_prefix + fmt(value) + "," + point_row(r) + "\n";
        n_failed += r.n_failed;
    }
    return n_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ehscn — Monte Carlo simulator for RF-energy-harvesting "
                 "small-cell networks"};
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string out_path = "ehscn_out.csv";
    std::optional<uint64_t> seed_override;
    std::optional<uint64_t> trials_override;
    int threads = 1;
    bool show_defaults = false;

    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--out", out_path, "output CSV path");
    app.add_option("--seed", seed_override, "override master seed");
    app.add_option("--trials", trials_override, "override trials per point");
    app.add_option("--threads", threads, "worker threads (results identical for any count)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--show-defaults", show_defaults,
                 "print the built-in default configuration and exit");

    std::string grid_spec;
    std::string preset_name;
    double lambda_ratio = 50.0;
    bool no_couple = false;
    std::string opt_param = "lambda_s";
    std::string opt_objective = "min_outage";

    auto* cmd_point = app.add_subcommand("point", "estimate a single parameter point");
    auto* cmd_slam = app.add_subcommand("sweep-lambda", "sweep the SBS density lambda_s");
    auto* cmd_sbeta = app.add_subcommand("sweep-beta", "sweep the on-grid proportion beta");
    auto* cmd_cpath = app.add_subcommand(
        "compare-pathloss", "lambda sweep under dual- and single-slope path loss");
    auto* cmd_cassoc = app.add_subcommand(
        "compare-association", "beta sweep under both association policies");
    auto* cmd_opt = app.add_subcommand("optimize", "grid search for the best parameter value");

    for (auto* cmd : {cmd_point, cmd_slam, cmd_sbeta, cmd_cpath, cmd_cassoc, cmd_opt})
        cmd->fallthrough();  // global flags are valid after the subcommand

    for (auto* cmd : {cmd_slam, cmd_sbeta, cmd_cpath, cmd_cassoc, cmd_opt}) {
        cmd->add_option("--grid", grid_spec,
                        "grid as lo:hi:step, log:lo:hi:count, or v1,v2,...");
        cmd->add_option("--preset", preset_name,
                        "named grid: lambda-dense, beta-coarse, beta-assoc");
    }
    for (auto* cmd : {cmd_slam, cmd_cpath, cmd_opt}) {
        cmd->add_option("--lambda-ratio", lambda_ratio,
                        "keep lambda_m = lambda_s / ratio during lambda sweeps");
        cmd->add_flag("--no-couple", no_couple, "hold lambda_m at its configured value");
    }
    cmd_opt->add_option("--param", opt_param, "swept parameter: lambda_s or beta")
        ->check(CLI::IsMember({"lambda_s", "beta"}));
    cmd_opt->add_option("--objective", opt_objective, "min_outage or max_ee")
        ->check(CLI::IsMember({"min_outage", "max_ee"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage problems are config errors
    }

    if (show_defaults) {
        ParamsHandle defaults;
        defaults.p = ehscn_params_create();
        const int n_keys = ehscn_params_key_count();
        for (int i = 0; i < n_keys; ++i) {
            const char* key = ehscn_params_key_name(i);
            std::cout << key << "=" << get_key(defaults.p, key) << "\n";
        }
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 1;
    }

    ParamsHandle params;
    if (!config_path.empty()) {
        char err[kErrLen];
        params.p = ehscn_params_load(config_path.c_str(), err, sizeof(err));
        if (!params.p)
            fail(1, std::string("config error: ") + err);
    } else {
        params.p = ehscn_params_create();
    }
    if (seed_override)
        set_or_fail(params.p, "seed", std::to_string(*seed_override));
    if (trials_override)
        set_or_fail(params.p, "n_trials", std::to_string(*trials_override));
    {
        char err[kErrLen];
        if (ehscn_params_validate(params.p, err, sizeof(err)) != EHSCN_OK)
            fail(1, std::string("config error: ") + err);
    }

    auto resolve_grid = [&](const char* fallback_preset) {
        if (!grid_spec.empty() && !preset_name.empty())
            fail(1, "--grid and --preset are mutually exclusive");
        if (!grid_spec.empty())
            return parse_grid(grid_spec);
        return preset_or_fail(preset_name.empty() ? fallback_preset
                                                  : preset_name);
    };

    std::string csv;
    std::string detail;
    uint64_t n_failed_total = 0;
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    if (sub == cmd_point) {
        const ehscn_point_result r = estimate_or_fail(params.p, threads);
        csv = std::string(kPointHeader) + "\n" + point_row(r) + "\n";
        n_failed_total = r.n_failed;
    } else if (sub == cmd_slam || sub == cmd_cpath) {
        const auto grid = resolve_grid("lambda-dense");
        const bool couple = !no_couple;
        if (sub == cmd_slam) {
            SweepHandle sweep = sweep_or_fail({}, params.p, EHSCN_SWEEP_LAMBDA_S,
                                              grid, couple, lambda_ratio, threads);
            csv = std::string("param_value,") + kPointHeader + "\n";
            n_failed_total = append_sweep_rows(csv, sweep.s, "");
        } else {
            // dual as configured, single-slope with alpha = alpha_far
            ParamsHandle single;
            single.p = ehscn_params_clone(params.p);
            set_or_fail(single.p, "alpha_near", get_key(params.p, "alpha_far"));
            set_or_fail(single.p, "pathloss_mode", "single");
            ParamsHandle dual;
            dual.p = ehscn_params_clone(params.p);
            set_or_fail(dual.p, "pathloss_mode", "dual");

            SweepHandle dual_sweep = sweep_or_fail(
                {}, dual.p, EHSCN_SWEEP_LAMBDA_S, grid, couple, lambda_ratio, threads);
            SweepHandle single_sweep = sweep_or_fail(
                {}, single.p, EHSCN_SWEEP_LAMBDA_S, grid, couple, lambda_ratio, threads);
            csv = std::string("pathloss_mode,param_value,") + kPointHeader + "\n";
            n_failed_total += append_sweep_rows(csv, dual_sweep.s, "dual,");
            n_failed_total += append_sweep_rows(csv, single_sweep.s, "single,");
        }
        detail = couple ? "coupling=lambda_m=lambda_s/" + fmt(lambda_ratio)
                        : std::string("coupling=off");
    } else if (sub == cmd_sbeta) {
        const auto grid = resolve_grid("beta-coarse");
        SweepHandle sweep = sweep_or_fail({}, params.p, EHSCN_SWEEP_BETA, grid,
                                          false, lambda_ratio, threads);
        csv = std::string("param_value,") + kPointHeader + "\n";
        n_failed_total = append_sweep_rows(csv, sweep.s, "");
    } else if (sub == cmd_cassoc) {
        const auto grid = resolve_grid("beta-assoc");
        ParamsHandle any;
        any.p = ehscn_params_clone(params.p);
        set_or_fail(any.p, "association", "nearest_any");
        ParamsHandle off;
        off.p = ehscn_params_clone(params.p);
        set_or_fail(off.p, "association", "offgrid_only");

        SweepHandle any_sweep = sweep_or_fail({}, any.p, EHSCN_SWEEP_BETA, grid,
                                              false, lambda_ratio, threads);
        SweepHandle off_sweep = sweep_or_fail({}, off.p, EHSCN_SWEEP_BETA, grid,
                                              false, lambda_ratio, threads);
        csv = std::string("association,param_value,") + kPointHeader + "\n";
        n_failed_total += append_sweep_rows(csv, any_sweep.s, "nearest_any,");
        n_failed_total += append_sweep_rows(csv, off_sweep.s, "offgrid_only,");
    } else if (sub == cmd_opt) {
        const bool is_lambda = opt_param == "lambda_s";
        const auto grid = resolve_grid(is_lambda ? "lambda-dense" : "beta-coarse");
        SweepHandle sweep = sweep_or_fail(
            {}, params.p, is_lambda ? EHSCN_SWEEP_LAMBDA_S : EHSCN_SWEEP_BETA,
            grid, is_lambda && !no_couple, lambda_ratio, threads);
        ehscn_optimum opt{};
        const ehscn_objective obj = opt_objective == "min_outage"
                                        ? EHSCN_OBJ_MIN_OUTAGE
                                        : EHSCN_OBJ_MAX_EE;
        if (ehscn_sweep_optimal(sweep.s, obj, &opt) != EHSCN_OK)
            fail(2, "optimizer failed");
        csv = std::string("objective,param,param_value,") + kPointHeader +
              ",ci_separated,runner_up_value\n";
        csv += opt_objective + "," + opt_param + "," + fmt(opt.param_value) +
               "," + point_row(opt.point) + "," +
               std::to_string(opt.ci_separated) + "," +
               fmt(opt.runner_up_value) + "\n";
        n_failed_total = opt.point.n_failed;
        detail = "objective=" + opt_objective + " param=" + opt_param;
    }

    write_file_or_fail(out_path, csv);
    write_manifest(out_path, params.p, name, detail, n_failed_total);
    return 0;
}
