#include "ehscn/geometry.hpp"

#include <limits>
#include <numbers>
#include <stdexcept>

#include "ehscn/params.hpp"

namespace ehscn {

std::vector<Vec2> sample_ppp(double intensity, Region region, RngStream& rng) {
    if (!(intensity >= 0.0))
        throw std::invalid_argument("sample_ppp: intensity must be >= 0");
    region.validate();

    const double r = region.radius_m;
    const double mean_count = intensity * std::numbers::pi * r * r;
    std::vector<Vec2> points;
    if (mean_count == 0.0)
        return points;

    std::poisson_distribution<long> count_dist(mean_count);
    const long n = count_dist(rng);
    points.reserve(static_cast<std::size_t>(n));

    // radius by inverse CDF (R*sqrt(u)), angle uniform; one (u, phi) pair
    // per point in a fixed order so draws are reproducible
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (long i = 0; i < n; ++i) {
        const double radius = r * std::sqrt(unit(rng));
        const double angle = 2.0 * std::numbers::pi * unit(rng);
        points.push_back({radius * std::cos(angle), radius * std::sin(angle)});
    }
    return points;
}

std::pair<std::vector<Vec2>, std::vector<Vec2>>
thin(const std::vector<Vec2>& points, double beta, RngStream& rng) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("thin: beta must be in [0,1]");

    std::vector<Vec2> kept;
    std::vector<Vec2> removed;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const Vec2& p : points) {
        if (unit(rng) < beta)
            kept.push_back(p);
        else
            removed.push_back(p);
    }
    return {std::move(kept), std::move(removed)};
}

std::optional<NearestHit> nearest(std::span<const Vec2> points, Vec2 query) {
    if (points.empty())
        return std::nullopt;

    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dx = points[i].x - query.x;
        const double dy = points[i].y - query.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return NearestHit{best, std::sqrt(best_d2)};
}

Deployment deploy(const SimParams& params, RngStream& rng) {
    params.validate();

    Deployment d;
    d.region = params.region;
    d.macro_positions = sample_ppp(params.lambda_m, params.region, rng);
    auto sbs = sample_ppp(params.lambda_s, params.region, rng);
    auto [ongrid, offgrid] = thin(sbs, params.beta, rng);
    d.ongrid_positions = std::move(ongrid);
    d.offgrid_positions = std::move(offgrid);
    return d;
}

} // namespace ehscn
