#pragma once

#include <cstdint>
#include <stdexcept>

#include "ehscn/channel.hpp"
#include "ehscn/geometry.hpp"

namespace ehscn {

/// Serving-cell selection policy for the typical user. Macro BSs never
/// serve; they only interfere and feed the harvesters.
enum class Association { nearest_any, offgrid_only };

/// Every scalar knob of the model. Power values are stored in the units
/// they are usually quoted in (dBm / dB) and converted on demand.
struct SimParams {
    double lambda_m = 4e-6;  ///< macro BS intensity, per m^2
    double lambda_s = 2e-4;  ///< SBS intensity, per m^2
    double beta = 0.5;       ///< proportion of on-grid SBSs, in [0,1]

    double p_m_dbm = 40.0;    ///< macro transmit power
    double p_s_dbm = 23.0;    ///< SBS grid power, also the battery cap
    double eta = 0.7;         ///< RF-to-DC conversion efficiency, in (0,1]
    double n0_dbm = -120.0;   ///< noise power
    double theta_t_db = 5.0;  ///< target SINR
    double p_eps_dbm = 6.0;   ///< static power draw of a serving SBS

    PathLossModel path_loss{};
    Region region{};

    std::uint64_t n_trials = 10000;
    std::uint64_t seed = 1;
    Association association = Association::nearest_any;

    double p_m_w() const { return dbm_to_watt(p_m_dbm); }
    double p_s_w() const { return dbm_to_watt(p_s_dbm); }
    double n0_w() const { return dbm_to_watt(n0_dbm); }
    double p_eps_w() const { return dbm_to_watt(p_eps_dbm); }
    double theta_t_linear() const { return db_to_linear(theta_t_db); }

    void validate() const {
        if (!(lambda_m >= 0.0))
            throw std::invalid_argument("lambda_m must be >= 0");
        if (!(lambda_s >= 0.0))
            throw std::invalid_argument("lambda_s must be >= 0");
        if (!(beta >= 0.0 && beta <= 1.0))
            throw std::invalid_argument("beta must be in [0,1]");
        if (!(eta > 0.0 && eta <= 1.0))
            throw std::invalid_argument("eta must be in (0,1]");
        if (n_trials < 1)
            throw std::invalid_argument("n_trials must be >= 1");
        path_loss.validate();
        region.validate();
    }
};

} // namespace ehscn
