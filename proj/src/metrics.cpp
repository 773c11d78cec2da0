#include "ehscn/metrics.hpp"

#include <cmath>

#include "ehscn/channel.hpp"

namespace ehscn {

Serving select_serving(const Deployment& deployment, Association association) {
    const Vec2 origin{0.0, 0.0};
    const auto off = nearest(deployment.offgrid_positions, origin);

    if (association == Association::offgrid_only) {
        if (!off)
            return {};
        return {ServingClass::offgrid, off->index, off->distance_m};
    }

    const auto on = nearest(deployment.ongrid_positions, origin);
    if (!on && !off)
        return {};
    // scan order on-grid then off-grid; exact ties favor the on-grid list
    if (on && (!off || on->distance_m <= off->distance_m))
        return {ServingClass::ongrid, on->index, on->distance_m};
    return {ServingClass::offgrid, off->index, off->distance_m};
}

double aggregate_interference(const Deployment& deployment,
                              const PowerMap& powers,
                              ServingClass serving_class,
                              std::size_t serving_index,
                              const SimParams& params) {
    const Vec2 origin{0.0, 0.0};
    double total = 0.0;

    for (std::size_t i = 0; i < deployment.ongrid_positions.size(); ++i) {
        if (serving_class == ServingClass::ongrid && i == serving_index)
            continue;
        total += powers.ongrid_powers_w[i] *
                 path_loss(distance(deployment.ongrid_positions[i], origin),
                           params.path_loss);
    }
    for (std::size_t i = 0; i < deployment.offgrid_positions.size(); ++i) {
        if (serving_class == ServingClass::offgrid && i == serving_index)
            continue;
        total += powers.offgrid_powers_w[i] *
                 path_loss(distance(deployment.offgrid_positions[i], origin),
                           params.path_loss);
    }
    for (std::size_t i = 0; i < deployment.macro_positions.size(); ++i) {
        total += powers.macro_powers_w[i] *
                 path_loss(distance(deployment.macro_positions[i], origin),
                           params.path_loss);
    }
    return total;
}

double sinr(double serving_power_w, double serving_distance_m,
            double interference_w, const SimParams& params) {
    if (serving_power_w == 0.0)
        return 0.0;
    const double signal =
        serving_power_w * path_loss(serving_distance_m, params.path_loss);
    return signal / (interference_w + params.n0_w());
}

double energy_efficiency(double sinr_linear, ServingClass serving_class,
                         const SimParams& params) {
    if (serving_class == ServingClass::none)
        return 0.0;
    const double rate = std::log2(1.0 + sinr_linear);
    const double grid_power = serving_class == ServingClass::ongrid
                                  ? params.p_s_w() + params.p_eps_w()
                                  : params.p_eps_w();
    return rate / grid_power;
}

TrialOutcome evaluate_user(const Deployment& deployment,
                           const SimParams& params) {
    const PowerMap powers = assign_powers(deployment, params);
    const Serving serving = select_serving(deployment, params.association);

    TrialOutcome outcome;
    outcome.serving_class = serving.cls;
    if (serving.cls == ServingClass::none) {
        // empty candidate set: outage by definition
        outcome.outage = true;
        outcome.ee = 0.0;
        return outcome;
    }

    outcome.serving_index = serving.index;
    outcome.serving_power_w = serving.cls == ServingClass::ongrid
                                  ? powers.ongrid_powers_w[serving.index]
                                  : powers.offgrid_powers_w[serving.index];

    const double interference = aggregate_interference(
        deployment, powers, serving.cls, serving.index, params);
    outcome.sinr_linear = sinr(outcome.serving_power_w, serving.distance_m,
                               interference, params);
    outcome.outage = outcome.sinr_linear <= params.theta_t_linear();
    outcome.ee = energy_efficiency(outcome.sinr_linear, serving.cls, params);
    return outcome;
}

} // namespace ehscn
