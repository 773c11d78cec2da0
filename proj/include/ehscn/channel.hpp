#pragma once

#include <cmath>
#include <stdexcept>

namespace ehscn {

/// Thrown when a propagation distance is exactly zero (two sampled points
/// coincide, or a transmitter sits on top of the receiver). Has probability
/// zero under continuous sampling; callers may count and skip such trials.
class singular_distance_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class PathLossMode { dual, single };

/// Piecewise power-law attenuation: exponent alpha_near for
/// d <= critical_distance_m, alpha_far beyond. The law is applied as
/// written, with no continuity constant at the critical distance, so the
/// gain jumps there whenever the exponents differ. Single mode is the
/// degenerate case alpha_near == alpha_far.
struct PathLossModel {
    double alpha_near = 2.0;
    double alpha_far = 4.0;
    double critical_distance_m = 4.0;
    PathLossMode mode = PathLossMode::dual;
    /// When set, gain is clamped to at most 1 (and a zero distance yields
    /// gain 1 instead of throwing). Off by default.
    bool clamp_gain = false;

    void validate() const {
        if (!(alpha_near >= 0.0))
            throw std::invalid_argument("path loss: alpha_near must be >= 0");
        if (!(alpha_far >= 0.0))
            throw std::invalid_argument("path loss: alpha_far must be >= 0");
        if (!(critical_distance_m > 0.0))
            throw std::invalid_argument("path loss: critical_distance_m must be > 0");
        if (mode == PathLossMode::single && alpha_near != alpha_far)
            throw std::invalid_argument(
                "path loss: single mode requires alpha_near == alpha_far");
    }
};

namespace detail {

// d^(-alpha) with fast paths for the exponents the model defaults to.
inline double inverse_power(double d, double alpha) {
    if (alpha == 2.0)
        return 1.0 / (d * d);
    if (alpha == 4.0) {
        const double d2 = d * d;
        return 1.0 / (d2 * d2);
    }
    return std::pow(d, -alpha);
}

} // namespace detail

/// Multiplicative channel gain at distance `distance_m` (meters).
inline double path_loss(double distance_m, const PathLossModel& model) {
    if (distance_m < 0.0)
        throw std::invalid_argument("path_loss: negative distance");
    if (distance_m == 0.0) {
        if (model.clamp_gain)
            return 1.0;
        throw singular_distance_error("path_loss: zero distance");
    }
    const double alpha = distance_m <= model.critical_distance_m
                             ? model.alpha_near
                             : model.alpha_far;
    const double gain = detail::inverse_power(distance_m, alpha);
    if (model.clamp_gain && gain > 1.0)
        return 1.0;
    return gain;
}

inline double dbm_to_watt(double p_dbm) {
    return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

inline double db_to_linear(double x_db) {
    return std::pow(10.0, x_db / 10.0);
}

} // namespace ehscn
