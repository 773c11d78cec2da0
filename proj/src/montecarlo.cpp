#include "ehscn/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "ehscn/geometry.hpp"
#include "ehscn/power.hpp"

namespace ehscn {

namespace {

constexpr double kZ95 = 1.959963984540054;  // Phi^-1(0.975)

// Neumaier-compensated sum in index order; the reduction result depends
// only on the array contents, never on how trials were scheduled.
double compensated_sum(std::span<const double> values) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

} // namespace

TrialOutcome run_trial(const SimParams& params, RngStream& rng) {
    return evaluate_user(deploy(params, rng), params);
}

MetricEstimate wilson_interval(std::uint64_t successes, std::uint64_t n) {
    MetricEstimate est;
    est.metric = MetricId::outage;
    est.n_trials = n;
    if (n == 0) {
        est.mean = std::nan("");
        est.ci_lo = est.ci_hi = std::nan("");
        return est;
    }
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half =
        kZ95 * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    est.mean = p;
    est.ci_lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    est.ci_hi = successes == n ? 1.0 : std::min(1.0, center + half);
    return est;
}

MetricEstimate normal_interval(double mean, double sample_sd,
                               std::uint64_t n) {
    MetricEstimate est;
    est.metric = MetricId::ee;
    est.n_trials = n;
    if (n == 0) {
        est.mean = std::nan("");
        est.ci_lo = est.ci_hi = std::nan("");
        return est;
    }
    const double half = kZ95 * sample_sd / std::sqrt(static_cast<double>(n));
    est.mean = mean;
    est.ci_lo = mean - half;
    est.ci_hi = mean + half;
    return est;
}

PointEstimate estimate(const SimParams& params, unsigned n_threads) {
    params.validate();
    if (n_threads < 1)
        n_threads = 1;

    const std::uint64_t n = params.n_trials;
    std::vector<double> ee(n, 0.0);
    std::vector<std::uint8_t> outage(n, 0);
    std::vector<std::uint8_t> failed(n, 0);

    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t) {
            RngStream rng = make_stream(trial_seed(params.seed, t));
            try {
                const TrialOutcome outcome = run_trial(params, rng);
                ee[t] = outcome.ee;
                outage[t] = outcome.outage ? 1 : 0;
            } catch (const singular_distance_error&) {
                failed[t] = 1;
            }
        }
    };

    if (n_threads == 1 || n < 2 * n_threads) {
        worker(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        const std::uint64_t chunk = (n + n_threads - 1) / n_threads;
        for (unsigned i = 0; i < n_threads; ++i) {
            const std::uint64_t begin = i * chunk;
            const std::uint64_t end = std::min(n, begin + chunk);
            if (begin >= end)
                break;
            pool.emplace_back([&, begin, end] {
                try {
                    worker(begin, end);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                }
            });
        }
        for (auto& th : pool)
            th.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    // fixed-order reduction over the per-trial arrays
    std::uint64_t n_failed = 0;
    std::uint64_t n_outage = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
        n_failed += failed[t];
        n_outage += outage[t];
    }
    const std::uint64_t n_valid = n - n_failed;

    std::vector<double> valid_ee;
    valid_ee.reserve(n_valid);
    for (std::uint64_t t = 0; t < n; ++t)
        if (!failed[t])
            valid_ee.push_back(ee[t]);

    PointEstimate point;
    point.n_failed = n_failed;
    point.outage = wilson_interval(n_outage, n_valid);

    double mean = 0.0;
    double sd = 0.0;
    if (n_valid > 0) {
        mean = compensated_sum(valid_ee) / static_cast<double>(n_valid);
        std::vector<double> sq(valid_ee.size());
        for (std::size_t i = 0; i < valid_ee.size(); ++i) {
            const double d = valid_ee[i] - mean;
            sq[i] = d * d;
        }
        if (n_valid > 1)
            sd = std::sqrt(compensated_sum(sq) /
                           static_cast<double>(n_valid - 1));
    }
    point.ee = normal_interval(mean, sd, n_valid);
    return point;
}

} // namespace ehscn
