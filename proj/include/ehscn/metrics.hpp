#pragma once

#include <cstddef>
#include <span>

#include "ehscn/geometry.hpp"
#include "ehscn/params.hpp"
#include "ehscn/power.hpp"

namespace ehscn {

enum class ServingClass { ongrid, offgrid, none };

struct Serving {
    ServingClass cls = ServingClass::none;
    std::size_t index = 0;     ///< into the matching Deployment list
    double distance_m = 0.0;   ///< to the user at the origin
};

/// Everything measured for the typical user in one realization.
struct TrialOutcome {
    ServingClass serving_class = ServingClass::none;
    std::size_t serving_index = 0;
    double serving_power_w = 0.0;
    double sinr_linear = 0.0;
    bool outage = true;
    double ee = 0.0;  ///< bits/s/Hz per watt of grid power
};

/// Picks the serving SBS for the user at the origin. nearest_any scans
/// on-grid then off-grid SBSs (macros never serve); offgrid_only restricts
/// the candidates to off-grid SBSs. An empty candidate set yields class
/// `none`, which the caller treats as outage by definition.
Serving select_serving(const Deployment& deployment, Association association);

/// Aggregate interference at the origin: every SBS of either class except
/// the serving one, plus every macro BS, weighted by its PowerMap power
/// and its path loss to the user.
double aggregate_interference(const Deployment& deployment,
                              const PowerMap& powers,
                              ServingClass serving_class,
                              std::size_t serving_index,
                              const SimParams& params);

/// Received SINR of the user: p_s * L(d_s) / (I + N0). A zero serving
/// power yields exactly zero.
double sinr(double serving_power_w, double serving_distance_m,
            double interference_w, const SimParams& params);

/// Spectral efficiency per watt of grid power: log2(1 + SINR) divided by
/// Ps + Peps for an on-grid serving SBS, by Peps alone for an off-grid
/// one. Class `none` yields zero.
double energy_efficiency(double sinr_linear, ServingClass serving_class,
                         const SimParams& params);

/// Full per-realization pipeline on a fixed deployment: power assignment,
/// serving selection, interference, SINR, outage flag, energy efficiency.
TrialOutcome evaluate_user(const Deployment& deployment,
                           const SimParams& params);

} // namespace ehscn
