#pragma once

#include <span>
#include <vector>

#include "ehscn/geometry.hpp"
#include "ehscn/params.hpp"

namespace ehscn {

/// Transmit power of every deployed transmitter, in watts, index-aligned
/// with the Deployment position lists. Macro and on-grid entries are the
/// fixed grid powers; off-grid entries are harvested and capped.
struct PowerMap {
    std::vector<double> macro_powers_w;
    std::vector<double> ongrid_powers_w;
    std::vector<double> offgrid_powers_w;
};

/// Harvested transmit power of an off-grid SBS at `sbs_position`:
/// min(Ps, eta * (sum of on-grid SBS contributions + sum of macro
/// contributions)), each contribution being source power times path loss.
/// Off-grid SBSs never feed each other. Throws singular_distance_error if
/// the SBS coincides with a harvest source.
double harvested_power(Vec2 sbs_position,
                       std::span<const Vec2> ongrid_positions,
                       std::span<const Vec2> macro_positions,
                       const SimParams& params);

/// Assigns powers to a whole deployment: Ps to on-grid SBSs, Pm to macro
/// BSs, harvested power to each off-grid SBS.
PowerMap assign_powers(const Deployment& deployment, const SimParams& params);

} // namespace ehscn
