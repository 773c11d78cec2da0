#include "ehscn/sweep.hpp"

#include <stdexcept>

namespace ehscn {

namespace {

void check_grid(std::span<const double> grid) {
    if (grid.empty())
        throw std::invalid_argument("sweep: empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("sweep: grid must be strictly increasing");
}

} // namespace

SweepResult sweep_lambda(const SimParams& base, std::span<const double> grid,
                         LambdaCoupling coupling, unsigned n_threads) {
    check_grid(grid);
    if (!(grid.front() >= 0.0))
        throw std::invalid_argument("sweep_lambda: intensities must be >= 0");
    if (coupling.couple && !(coupling.ratio > 0.0))
        throw std::invalid_argument("sweep_lambda: coupling ratio must be > 0");

    SweepResult result;
    result.param = SweptParam::lambda_s;
    result.base = base;
    result.points.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SimParams p = base;
        p.lambda_s = grid[i];
        if (coupling.couple)
            p.lambda_m = grid[i] / coupling.ratio;
        p.seed = point_seed(base.seed, i);
        result.points.push_back({grid[i], estimate(p, n_threads)});
    }
    return result;
}

SweepResult sweep_beta(const SimParams& base, std::span<const double> grid,
                       unsigned n_threads) {
    check_grid(grid);
    if (!(grid.front() >= 0.0 && grid.back() <= 1.0))
        throw std::invalid_argument("sweep_beta: grid must lie within [0,1]");

    SweepResult result;
    result.param = SweptParam::beta;
    result.base = base;
    result.points.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SimParams p = base;
        p.beta = grid[i];
        p.seed = point_seed(base.seed, i);
        result.points.push_back({grid[i], estimate(p, n_threads)});
    }
    return result;
}

Optimum find_optimal(const SweepResult& sweep, Objective objective) {
    if (sweep.points.empty())
        throw std::invalid_argument("find_optimal: empty sweep");

    const auto score = [&](const SweepPoint& pt) {
        return objective == Objective::min_outage ? pt.est.outage.mean
                                                  : pt.est.ee.mean;
    };
    const auto better = [&](double a, double b) {
        return objective == Objective::min_outage ? a < b : a > b;
    };

    // exhaustive scan; strict comparison keeps the smaller parameter on ties
    std::size_t best = 0;
    for (std::size_t i = 1; i < sweep.points.size(); ++i)
        if (better(score(sweep.points[i]), score(sweep.points[best])))
            best = i;

    Optimum opt;
    opt.index = best;
    opt.param_value = sweep.points[best].param_value;
    opt.est = sweep.points[best].est;

    if (sweep.points.size() == 1) {
        opt.ci_separated = false;
        opt.runner_up_value = opt.param_value;
        return opt;
    }

    std::size_t runner = best == 0 ? 1 : 0;
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
        if (i == best)
            continue;
        if (better(score(sweep.points[i]), score(sweep.points[runner])))
            runner = i;
    }
    opt.runner_up_value = sweep.points[runner].param_value;

    const auto& win = objective == Objective::min_outage
                          ? sweep.points[best].est.outage
                          : sweep.points[best].est.ee;
    const auto& run = objective == Objective::min_outage
                          ? sweep.points[runner].est.outage
                          : sweep.points[runner].est.ee;
    opt.ci_separated = objective == Objective::min_outage
                           ? win.ci_hi < run.ci_lo
                           : win.ci_lo > run.ci_hi;
    return opt;
}

} // namespace ehscn
