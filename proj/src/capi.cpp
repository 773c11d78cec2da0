#include "ehscn.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "ehscn/config.hpp"
#include "ehscn/montecarlo.hpp"
#include "ehscn/presets.hpp"
#include "ehscn/sweep.hpp"

struct ehscn_params {
    ehscn::SimParams p;
};

struct ehscn_sweep {
    ehscn::SweepResult r;
};

namespace {

constexpr const char* kVersion = "0.1.0";

void write_error(char* errbuf, size_t errbuf_len, const char* msg) {
    if (!errbuf || errbuf_len == 0)
        return;
    std::strncpy(errbuf, msg, errbuf_len - 1);
    errbuf[errbuf_len - 1] = '\0';
}

ehscn_status classify(const std::exception& e, char* errbuf, size_t len) {
    write_error(errbuf, len, e.what());
    if (dynamic_cast<const ehscn::config_error*>(&e) ||
        dynamic_cast<const std::invalid_argument*>(&e))
        return EHSCN_ERR_CONFIG;
    return EHSCN_ERR_RUNTIME;
}

void fill_point(const ehscn::PointEstimate& est, ehscn_point_result* out) {
    out->outage_mean = est.outage.mean;
    out->outage_ci_lo = est.outage.ci_lo;
    out->outage_ci_hi = est.outage.ci_hi;
    out->ee_mean = est.ee.mean;
    out->ee_ci_lo = est.ee.ci_lo;
    out->ee_ci_hi = est.ee.ci_hi;
    out->n_trials = est.outage.n_trials;
    out->n_failed = est.n_failed;
}

} // namespace

extern "C" {

const char* ehscn_version(void) {
    return kVersion;
}

ehscn_params* ehscn_params_create(void) {
    return new (std::nothrow) ehscn_params{};
}

ehscn_params* ehscn_params_load(const char* path, char* errbuf,
                                size_t errbuf_len) {
    if (!path) {
        write_error(errbuf, errbuf_len, "null path");
        return nullptr;
    }
    try {
        auto* handle = new ehscn_params{};
        try {
            handle->p = ehscn::parse_config_file(path);
        } catch (...) {
            delete handle;
            throw;
        }
        return handle;
    } catch (const std::exception& e) {
        write_error(errbuf, errbuf_len, e.what());
        return nullptr;
    }
}

ehscn_params* ehscn_params_clone(const ehscn_params* params) {
    if (!params)
        return nullptr;
    return new (std::nothrow) ehscn_params{params->p};
}

void ehscn_params_free(ehscn_params* params) {
    delete params;
}

ehscn_status ehscn_params_set(ehscn_params* params, const char* key,
                              const char* value, char* errbuf,
                              size_t errbuf_len) {
    if (!params || !key || !value) {
        write_error(errbuf, errbuf_len, "null argument");
        return EHSCN_ERR_ARG;
    }
    try {
        ehscn::apply_key_value(params->p, key, value);
        return EHSCN_OK;
    } catch (const std::exception& e) {
        return classify(e, errbuf, errbuf_len);
    }
}

ehscn_status ehscn_params_get(const ehscn_params* params, const char* key,
                              char* buf, size_t buf_len) {
    if (!params || !key || !buf || buf_len == 0)
        return EHSCN_ERR_ARG;
    try {
        const std::string value = ehscn::get_key_value(params->p, key);
        if (value.size() + 1 > buf_len)
            return EHSCN_ERR_ARG;
        std::memcpy(buf, value.c_str(), value.size() + 1);
        return EHSCN_OK;
    } catch (const std::exception&) {
        return EHSCN_ERR_CONFIG;
    }
}

ehscn_status ehscn_params_validate(const ehscn_params* params, char* errbuf,
                                   size_t errbuf_len) {
    if (!params) {
        write_error(errbuf, errbuf_len, "null params");
        return EHSCN_ERR_ARG;
    }
    try {
        params->p.validate();
        return EHSCN_OK;
    } catch (const std::exception& e) {
        return classify(e, errbuf, errbuf_len);
    }
}

int ehscn_params_key_count(void) {
    return static_cast<int>(ehscn::config_keys().size());
}

const char* ehscn_params_key_name(int index) {
    const auto& keys = ehscn::config_keys();
    if (index < 0 || index >= static_cast<int>(keys.size()))
        return nullptr;
    return keys[static_cast<size_t>(index)].c_str();
}

ehscn_status ehscn_estimate(const ehscn_params* params, int n_threads,
                            ehscn_point_result* out, char* errbuf,
                            size_t errbuf_len) {
    if (!params || !out) {
        write_error(errbuf, errbuf_len, "null argument");
        return EHSCN_ERR_ARG;
    }
    if (n_threads < 1) {
        write_error(errbuf, errbuf_len, "n_threads must be >= 1");
        return EHSCN_ERR_ARG;
    }
    try {
        const auto est =
            ehscn::estimate(params->p, static_cast<unsigned>(n_threads));
        fill_point(est, out);
        return EHSCN_OK;
    } catch (const std::exception& e) {
        return classify(e, errbuf, errbuf_len);
    }
}

ehscn_status ehscn_sweep_run(const ehscn_params* params,
                             ehscn_sweep_param param, const double* grid,
                             size_t n, int couple_lambda_m,
                             double lambda_ratio, int n_threads,
                             ehscn_sweep** out, char* errbuf,
                             size_t errbuf_len) {
    if (!params || !grid || n == 0 || !out) {
        write_error(errbuf, errbuf_len, "null argument or empty grid");
        return EHSCN_ERR_ARG;
    }
    if (n_threads < 1) {
        write_error(errbuf, errbuf_len, "n_threads must be >= 1");
        return EHSCN_ERR_ARG;
    }
    try {
        std::span<const double> g(grid, n);
        ehscn::SweepResult result;
        const auto threads = static_cast<unsigned>(n_threads);
        if (param == EHSCN_SWEEP_LAMBDA_S) {
            ehscn::LambdaCoupling coupling;
            coupling.couple = couple_lambda_m != 0;
            coupling.ratio = lambda_ratio;
            result = ehscn::sweep_lambda(params->p, g, coupling, threads);
        } else if (param == EHSCN_SWEEP_BETA) {
            result = ehscn::sweep_beta(params->p, g, threads);
        } else {
            write_error(errbuf, errbuf_len, "unknown sweep parameter");
            return EHSCN_ERR_ARG;
        }
        *out = new ehscn_sweep{std::move(result)};
        return EHSCN_OK;
    } catch (const std::exception& e) {
        return classify(e, errbuf, errbuf_len);
    }
}

size_t ehscn_sweep_size(const ehscn_sweep* sweep) {
    return sweep ? sweep->r.points.size() : 0;
}

ehscn_status ehscn_sweep_point(const ehscn_sweep* sweep, size_t index,
                               double* param_value, ehscn_point_result* out) {
    if (!sweep || !out)
        return EHSCN_ERR_ARG;
    if (index >= sweep->r.points.size())
        return EHSCN_ERR_ARG;
    const auto& pt = sweep->r.points[index];
    if (param_value)
        *param_value = pt.param_value;
    fill_point(pt.est, out);
    return EHSCN_OK;
}

void ehscn_sweep_free(ehscn_sweep* sweep) {
    delete sweep;
}

ehscn_status ehscn_sweep_optimal(const ehscn_sweep* sweep,
                                 ehscn_objective objective,
                                 ehscn_optimum* out) {
    if (!sweep || !out)
        return EHSCN_ERR_ARG;
    if (objective != EHSCN_OBJ_MIN_OUTAGE && objective != EHSCN_OBJ_MAX_EE)
        return EHSCN_ERR_ARG;
    try {
        const auto opt = ehscn::find_optimal(
            sweep->r, objective == EHSCN_OBJ_MIN_OUTAGE
                          ? ehscn::Objective::min_outage
                          : ehscn::Objective::max_ee);
        out->index = opt.index;
        out->param_value = opt.param_value;
        fill_point(opt.est, &out->point);
        out->ci_separated = opt.ci_separated ? 1 : 0;
        out->runner_up_value = opt.runner_up_value;
        return EHSCN_OK;
    } catch (const std::exception&) {
        return EHSCN_ERR_RUNTIME;
    }
}

size_t ehscn_preset_grid(const char* name, double* out, size_t cap) {
    if (!name)
        return 0;
    const auto grid = ehscn::preset_grid(name);
    if (out) {
        const size_t n = grid.size() < cap ? grid.size() : cap;
        for (size_t i = 0; i < n; ++i)
            out[i] = grid[i];
    }
    return grid.size();
}

} // extern "C"
