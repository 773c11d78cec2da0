#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehscn/rng.hpp"

namespace ehscn {

struct SimParams;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double norm(Vec2 v) {
    return std::sqrt(v.x * v.x + v.y * v.y);
}

inline double distance(Vec2 a, Vec2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

/// Simulation window: a disc centered at the origin (where the typical
/// user sits).
struct Region {
    double radius_m = 500.0;

    void validate() const {
        if (!(radius_m > 0.0))
            throw std::invalid_argument("region: radius_m must be > 0");
    }
};

/// One spatial realization of the network. The typical user is implicitly
/// at the origin; every transmitter belongs to exactly one of the three
/// position lists.
struct Deployment {
    std::vector<Vec2> macro_positions;
    std::vector<Vec2> ongrid_positions;
    std::vector<Vec2> offgrid_positions;
    Region region;
};

/// Draws one realization of a homogeneous Poisson point process of the
/// given intensity (points per m^2) on the disc: Poisson count, then
/// i.i.d. uniform positions (radius via inverse CDF, uniform angle).
std::vector<Vec2> sample_ppp(double intensity, Region region, RngStream& rng);

/// Independent thinning: each point goes to `kept` with probability beta,
/// else to `removed`. Both lists preserve the input order.
std::pair<std::vector<Vec2>, std::vector<Vec2>>
thin(const std::vector<Vec2>& points, double beta, RngStream& rng);

struct NearestHit {
    std::size_t index = 0;
    double distance_m = 0.0;
};

/// Minimum-Euclidean-distance point to `query`; ties break toward the
/// lowest index. Empty input yields nullopt (no candidate).
std::optional<NearestHit> nearest(std::span<const Vec2> points, Vec2 query);

/// Samples a full deployment: macro PPP, SBS PPP, then thinning of the
/// SBS process into on-grid (probability beta) and off-grid points.
Deployment deploy(const SimParams& params, RngStream& rng);

} // namespace ehscn
