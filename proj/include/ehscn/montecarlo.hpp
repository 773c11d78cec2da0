#pragma once

#include <cstdint>
#include <span>

#include "ehscn/metrics.hpp"
#include "ehscn/params.hpp"
#include "ehscn/rng.hpp"

namespace ehscn {

enum class MetricId { outage, ee };

/// Monte Carlo estimate of one metric at one parameter point, with a 95%
/// confidence interval. The interval can be asymmetric around the mean
/// (Wilson, for proportions), so both endpoints are kept.
struct MetricEstimate {
    double mean = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t n_trials = 0;  ///< valid trials behind the estimate
    MetricId metric = MetricId::outage;

    double ci_halfwidth() const { return 0.5 * (ci_hi - ci_lo); }
};

struct PointEstimate {
    MetricEstimate outage;
    MetricEstimate ee;
    std::uint64_t n_failed = 0;  ///< trials dropped on singular distances
};

/// Runs one full realization: deploy, assign powers, select serving SBS,
/// aggregate interference, SINR, outage flag and energy efficiency.
TrialOutcome run_trial(const SimParams& params, RngStream& rng);

/// Runs params.n_trials independent trials and aggregates. Per-trial
/// streams are derived from params.seed by trial index, and reduction
/// order is fixed, so results are bit-identical for any thread count.
/// Trials that raise singular_distance_error are counted in n_failed and
/// excluded from both estimates.
PointEstimate estimate(const SimParams& params, unsigned n_threads = 1);

/// Wilson 95% interval for a proportion; mean is the raw fraction k/n.
MetricEstimate wilson_interval(std::uint64_t successes, std::uint64_t n);

/// Normal-approximation 95% interval from a sample mean and standard
/// deviation.
MetricEstimate normal_interval(double mean, double sample_sd, std::uint64_t n);

} // namespace ehscn
