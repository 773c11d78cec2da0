#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ehscn/montecarlo.hpp"
#include "ehscn/params.hpp"

namespace ehscn {

enum class SweptParam { lambda_s, beta };

struct SweepPoint {
    double param_value = 0.0;
    PointEstimate est;
};

struct SweepResult {
    SweptParam param = SweptParam::lambda_s;
    std::vector<SweepPoint> points;
    SimParams base;  ///< snapshot of the fixed parameters
};

/// How lambda_m follows lambda_s during a density sweep. The default is
/// the 50:1 SBS-to-macro ratio; disable coupling to hold lambda_m at its
/// base value.
struct LambdaCoupling {
    bool couple = true;
    double ratio = 50.0;
};

/// Estimates outage and EE over a strictly increasing grid of lambda_s
/// values. Point i runs with seed point_seed(base.seed, i); points are
/// independent, so evaluation order does not affect results.
SweepResult sweep_lambda(const SimParams& base, std::span<const double> grid,
                         LambdaCoupling coupling = {}, unsigned n_threads = 1);

/// Same over a grid of beta values (grid must lie within [0,1]).
SweepResult sweep_beta(const SimParams& base, std::span<const double> grid,
                       unsigned n_threads = 1);

enum class Objective { min_outage, max_ee };

struct Optimum {
    std::size_t index = 0;
    double param_value = 0.0;
    PointEstimate est;
    /// Winner's interval is disjoint from the runner-up's interval, i.e.
    /// the optimum is statistically distinguishable, not just noise.
    bool ci_separated = false;
    double runner_up_value = 0.0;
};

/// Exhaustive scan of the point estimates; ties break toward the smaller
/// parameter value.
Optimum find_optimal(const SweepResult& sweep, Objective objective);

} // namespace ehscn
