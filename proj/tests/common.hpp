#pragma once

// Shared helpers for the test suites: fixture <-> library conversions and
// the randomized small-fixture generator used for oracle comparisons.

#include <cmath>
#include <random>
#include <vector>

#include "ehscn/geometry.hpp"
#include "ehscn/metrics.hpp"
#include "ehscn/params.hpp"
#include "oracle.hpp"

namespace testutil {

inline ehscn::SimParams params_from_fixture(const oracle::Fixture& f) {
    ehscn::SimParams p;
    p.eta = f.eta;
    p.p_m_dbm = f.p_m_dbm;
    p.p_s_dbm = f.p_s_dbm;
    p.n0_dbm = f.n0_dbm;
    p.theta_t_db = f.theta_t_db;
    p.p_eps_dbm = f.p_eps_dbm;
    p.path_loss.alpha_near = f.alpha_near;
    p.path_loss.alpha_far = f.alpha_far;
    p.path_loss.critical_distance_m = f.d_c_m;
    p.association = f.offgrid_only ? ehscn::Association::offgrid_only
                                   : ehscn::Association::nearest_any;
    p.region.radius_m = 1000.0;  // large enough for any fixture
    return p;
}

inline ehscn::Deployment deployment_from_fixture(const oracle::Fixture& f) {
    ehscn::Deployment d;
    d.region.radius_m = 1000.0;
    for (const auto& tx : f.txs) {
        switch (tx.cls) {
        case oracle::TxClass::macro:
            d.macro_positions.push_back({tx.x, tx.y});
            break;
        case oracle::TxClass::ongrid:
            d.ongrid_positions.push_back({tx.x, tx.y});
            break;
        case oracle::TxClass::offgrid:
            d.offgrid_positions.push_back({tx.x, tx.y});
            break;
        }
    }
    return d;
}

/// Random fixture with 1..10 transmitters in a 50 m box around the user,
/// keeping every pairwise and user distance away from zero so no singular
/// distances occur. Roughly half the fixtures use the off-grid-only policy
/// and a third use a single-slope model.
inline oracle::Fixture random_fixture(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    std::uniform_int_distribution<int> count(1, 10);
    std::uniform_int_distribution<int> cls(0, 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    oracle::Fixture f;
    if (unit(rng) < 0.33) {
        f.alpha_near = f.alpha_far = 4.0;
    }
    f.offgrid_only = unit(rng) < 0.5;

    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        oracle::Tx tx{};
        tx.cls = static_cast<oracle::TxClass>(cls(rng));
        while (true) {
            tx.x = coord(rng);
            tx.y = coord(rng);
            const double d0 = std::hypot(tx.x, tx.y);
            bool ok = d0 > 0.05;
            for (const auto& other : f.txs)
                ok = ok && std::hypot(tx.x - other.x, tx.y - other.y) > 0.05;
            if (ok)
                break;
        }
        f.txs.push_back(tx);
    }
    return f;
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0)
        return 0.0;
    return std::abs(a - b) / scale;
}

} // namespace testutil
