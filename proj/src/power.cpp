#include "ehscn/power.hpp"

#include <algorithm>

#include "ehscn/channel.hpp"

namespace ehscn {

double harvested_power(Vec2 sbs_position,
                       std::span<const Vec2> ongrid_positions,
                       std::span<const Vec2> macro_positions,
                       const SimParams& params) {
    const double p_s = params.p_s_w();
    const double p_m = params.p_m_w();

    double incident = 0.0;
    for (const Vec2& src : ongrid_positions)
        incident += p_s * path_loss(distance(sbs_position, src), params.path_loss);
    for (const Vec2& src : macro_positions)
        incident += p_m * path_loss(distance(sbs_position, src), params.path_loss);

    return std::min(p_s, params.eta * incident);
}

PowerMap assign_powers(const Deployment& deployment, const SimParams& params) {
    PowerMap powers;
    powers.macro_powers_w.assign(deployment.macro_positions.size(), params.p_m_w());
    powers.ongrid_powers_w.assign(deployment.ongrid_positions.size(), params.p_s_w());

    powers.offgrid_powers_w.reserve(deployment.offgrid_positions.size());
    for (const Vec2& sbs : deployment.offgrid_positions)
        powers.offgrid_powers_w.push_back(
            harvested_power(sbs, deployment.ongrid_positions,
                            deployment.macro_positions, params));
    return powers;
}

} // namespace ehscn
