#include <doctest.h>

#include <cmath>
#include <limits>

#include "ehscn/channel.hpp"

using namespace ehscn;

TEST_CASE("dbm and db conversions") {
    CHECK(dbm_to_watt(40.0) == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(dbm_to_watt(23.0) ==
          doctest::Approx(0.19952623149688797).epsilon(1e-14));
    CHECK(dbm_to_watt(-120.0) == doctest::Approx(1e-15).epsilon(1e-14));

    CHECK(db_to_linear(5.0) ==
          doctest::Approx(3.1622776601683795).epsilon(1e-14));
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("db round trip") {
    for (double x = 1e-15; x <= 1e3; x *= 3.7) {
        const double back = db_to_linear(10.0 * std::log10(x));
        CHECK(std::abs(back - x) / x < 1e-12);
    }
}

TEST_CASE("dual-slope branches") {
    PathLossModel m;  // defaults: near 2, far 4, dc 4

    CHECK(path_loss(2.0, m) == 0.25);
    CHECK(path_loss(8.0, m) == doctest::Approx(2.44140625e-4).epsilon(1e-14));
    // the near branch includes the critical distance itself
    CHECK(path_loss(4.0, m) == 0.0625);
}

TEST_CASE("discontinuity at the critical distance") {
    PathLossModel m;
    const double above = std::nextafter(4.0, 5.0);
    CHECK(path_loss(4.0, m) == 0.0625);
    CHECK(path_loss(above, m) == doctest::Approx(0.00390625).epsilon(1e-9));
    // the jump is a property of the piecewise law as written
    CHECK(path_loss(4.0, m) / path_loss(above, m) ==
          doctest::Approx(16.0).epsilon(1e-9));
}

TEST_CASE("single-slope recovery") {
    PathLossModel dual;
    dual.alpha_near = dual.alpha_far = 3.7;
    for (double d : {0.5, 1.0, 3.9, 4.0, 4.1, 25.0, 400.0})
        CHECK(path_loss(d, dual) ==
              doctest::Approx(std::pow(d, -3.7)).epsilon(1e-14));

    PathLossModel fast;
    fast.alpha_near = fast.alpha_far = 4.0;
    CHECK(path_loss(3.0, fast) == path_loss(3.0, fast));
    CHECK(path_loss(2.0, fast) == doctest::Approx(0.0625).epsilon(1e-14));
}

TEST_CASE("strictly decreasing within each branch") {
    PathLossModel m;
    double prev = path_loss(0.1, m);
    for (double d = 0.3; d <= 4.0; d += 0.2) {
        const double cur = path_loss(d, m);
        CHECK(cur < prev);
        prev = cur;
    }
    prev = path_loss(4.5, m);
    for (double d = 5.0; d < 100.0; d += 2.5) {
        const double cur = path_loss(d, m);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("singular distance and clamping") {
    PathLossModel m;
    CHECK_THROWS_AS(path_loss(0.0, m), singular_distance_error);
    CHECK_THROWS_AS(path_loss(-1.0, m), std::invalid_argument);

    m.clamp_gain = true;
    CHECK(path_loss(0.0, m) == 1.0);
    CHECK(path_loss(0.5, m) == 1.0);  // raw gain 4 clamps to 1
    CHECK(path_loss(2.0, m) == 0.25);
}

TEST_CASE("model validation") {
    PathLossModel m;
    m.alpha_near = -1.0;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);

    m = PathLossModel{};
    m.critical_distance_m = 0.0;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);

    m = PathLossModel{};
    m.mode = PathLossMode::single;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);  // 2 != 4
    m.alpha_near = m.alpha_far;
    CHECK_NOTHROW(m.validate());
}
