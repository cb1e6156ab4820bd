#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lorasat/doppler_model.hpp"
#include "lorasat/link.hpp"

using namespace lorasat;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;

DevicePass default_pass_a() {
    return make_device_pass(PhysicalConstants{}, 550.0e3, 15.0 * kDeg,
                            56.0 * kDeg, 0.0, 868.0e6);
}
}  // namespace

TEST_CASE("pure CFO helper") {
    const LinearDoppler d = LinearDoppler::cfo(1234.5);
    CHECK(d.v_d == 1234.5);
    CHECK(d.c_d == 0.0);
    CHECK(d.delta_f_k == 0.0);
}

TEST_CASE("continuous linearization of a real pass") {
    const DevicePass pass = default_pass_a();
    RadioConfig radio;  // SF9, B = 250 kHz

    const double t0 = -200.0;
    const int k = 37;
    const LinearDoppler d = linearize_continuous(pass, radio, k, t0);

    CHECK(d.v_d == doctest::Approx(pass.doppler_shift_at(t0)).epsilon(1e-15));
    // the chip-step slope tracks the finite-difference Doppler rate
    CHECK(d.c_d == doctest::Approx(pass.doppler_rate_at(t0)).epsilon(1e-3));

    // wrap step evaluated at the shrink time t0 + t_k, and tied to the shift
    // there by delta_f_k = -B * f_d / f_ref
    const double t_k = radio.chip_period() *
                       static_cast<double>(radio.symbol_count() - k);
    CHECK(d.delta_f_k ==
          doctest::Approx(-radio.bandwidth_hz *
                          pass.doppler_shift_at(t0 + t_k) / radio.fc_hz)
              .epsilon(1e-12));
    CHECK(d.delta_f_k < 0.0);  // approaching satellite: negative radial velocity

    // linear model error stays tiny across one symbol duration
    double mae = 0.0;
    const int n = 257;
    for (int i = 0; i < n; ++i) {
        const double u = radio.symbol_period() * static_cast<double>(i) /
                         static_cast<double>(n - 1);
        mae += std::abs(pass.doppler_shift_at(t0 + u) - (d.v_d + d.c_d * u));
    }
    mae /= static_cast<double>(n);
    CHECK(mae < 1e-4);
}

TEST_CASE("discrete linearization matches the continuous one at sample times") {
    const DevicePass pass = default_pass_a();
    RadioConfig radio;
    const double td = radio.sample_period();

    const long long m0 = static_cast<long long>(std::llround(-200.0 / td));
    const double t0 = static_cast<double>(m0) * td;

    SUBCASE("small k puts the slope difference in segment 1") {
        const LinearDoppler d = linearize_discrete(pass, radio, 3, m0);
        CHECK(d.v_d == doctest::Approx(pass.doppler_shift_at(t0)).epsilon(1e-15));
        CHECK(d.c_d == doctest::Approx(pass.doppler_rate_at(t0)).epsilon(1e-3));
    }
    SUBCASE("large k puts the slope difference in segment 2") {
        const LinearDoppler d = linearize_discrete(pass, radio, 500, m0);
        CHECK(d.v_d == doctest::Approx(pass.doppler_shift_at(t0)).epsilon(1e-15));
        CHECK(d.c_d == doctest::Approx(pass.doppler_rate_at(t0)).epsilon(1e-3));
    }
    SUBCASE("wrap step uses the sample-aligned shrink time") {
        const int k = 100;
        const LinearDoppler d = linearize_discrete(pass, radio, k, m0);
        const long long m_k = (radio.symbol_count() - k - 1) >> radio.s_exp;
        const double expected = radio.bandwidth_hz *
                                pass.radial_velocity_at(
                                    static_cast<double>(m0 + m_k) * td) /
                                pass.constants.c;
        CHECK(d.delta_f_k == doctest::Approx(expected).epsilon(1e-15));
    }
}

TEST_CASE("symbol value range is validated") {
    const DevicePass pass = default_pass_a();
    RadioConfig radio;
    CHECK_THROWS_AS((void)linearize_continuous(pass, radio, -1, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)linearize_continuous(pass, radio, 512, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)linearize_discrete(pass, radio, 512, 0),
                    std::invalid_argument);
}

TEST_CASE("differential Doppler across the default link") {
    const LinkGeometry g = build_link_geometry(scenario_preset("default"));
    const OperatingPoints op = operating_points(g.shared);

    CHECK(differential_doppler(g.pass_a, g.pass_b, op.t_high_shift, 868.0e6) ==
          doctest::Approx(-17.332329457).epsilon(1e-9));
    CHECK(differential_doppler(g.pass_a, g.pass_b, op.t_high_rate, 868.0e6) ==
          doctest::Approx(-258.912936514).epsilon(1e-9));

    // widening the ground separation to 50 km grows the spread
    ScenarioConfig cfg = scenario_preset("default");
    cfg.device_distance_m = 50.0e3;
    const LinkGeometry g50 = build_link_geometry(cfg);
    const OperatingPoints op50 = operating_points(g50.shared);
    CHECK(differential_doppler(g50.pass_a, g50.pass_b, op50.t_high_rate, 868.0e6) ==
          doctest::Approx(-1236.408443517).epsilon(1e-9));
}

TEST_CASE("receiver shift tolerance is half a DFT bin") {
    RadioConfig r;
    r.bandwidth_hz = 250.0e3;
    r.sf = 7;
    CHECK(tolerable_threshold(r) == doctest::Approx(976.5625).epsilon(1e-12));
    r.sf = 12;
    CHECK(tolerable_threshold(r) == doctest::Approx(30.517578125).epsilon(1e-12));
    r.bandwidth_hz = 500.0e3;
    r.sf = 5;
    CHECK(tolerable_threshold(r) == doctest::Approx(7812.5).epsilon(1e-12));
}
