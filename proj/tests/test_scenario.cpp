#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "lorasat/scenario.hpp"

using namespace lorasat;

TEST_CASE("radio derived quantities") {
    RadioConfig r;  // fc 868 MHz, B 250 kHz, sf 9, s_exp 0
    CHECK(r.f_min() == doctest::Approx(867.875e6));
    CHECK(r.chip_period() == doctest::Approx(4.0e-6));
    CHECK(r.symbol_period() == doctest::Approx(512 * 4.0e-6));
    CHECK(r.sample_period() == r.chip_period());
    CHECK(r.samples_per_symbol() == 512);
    CHECK(r.symbol_count() == 512);
    CHECK(r.chirp_rate() == doctest::Approx(250.0e3 * 250.0e3 / 512.0));

    r.s_exp = 2;
    CHECK(r.samples_per_symbol() == 128);
    CHECK(r.sample_period() == doctest::Approx(4 * 4.0e-6));
    // symbol period does not depend on the sampling choice
    CHECK(r.symbol_period() == doctest::Approx(512 * 4.0e-6));
}

TEST_CASE("radio validation") {
    RadioConfig r;
    CHECK_NOTHROW(r.validate());
    r.sf = 4;
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
    r.sf = 13;
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
    r.sf = 9;
    r.s_exp = 10;
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
    r.s_exp = -1;
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
    r.s_exp = 0;
    r.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
}

TEST_CASE("scenario validation") {
    ScenarioConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    SUBCASE("altitude range") {
        cfg.altitude_m = 100.0e3;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
        cfg.altitude_m = 950.0e3;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("elevation limits ordered") {
        cfg.theta_min_deg = 50.0;
        cfg.theta_max_deg = 10.0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("theta_c above theta_min") {
        cfg.device_a.theta_c_deg = 5.0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("schema version pinned") {
        cfg.schema_version = 2;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
}

TEST_CASE("presets") {
    const ScenarioConfig def = scenario_preset("default");
    CHECK(def.device_a.theta_c_deg == doctest::Approx(56.0));
    CHECK(def.device_b.theta_c_deg == doctest::Approx(56.2));
    CHECK(def.theta_max_deg == doctest::Approx(50.0));
    CHECK(def.altitude_m == doctest::Approx(550.0e3));
    CHECK(def.inclination_deg == doctest::Approx(15.0));
    CHECK(def.device_distance_m == doctest::Approx(10.0e3));

    const ScenarioConfig ber = scenario_preset("ber-paper");
    CHECK(ber.device_a.theta_c_deg == doctest::Approx(89.0));
    CHECK(ber.device_b.theta_c_deg == doctest::Approx(89.2));
    CHECK(ber.theta_max_deg == doctest::Approx(88.0));

    CHECK_THROWS_AS(scenario_preset("nope"), std::invalid_argument);
}

TEST_CASE("json round trip") {
    ScenarioConfig cfg = scenario_preset("default");
    cfg.altitude_m = 600.0e3;
    cfg.radio.sf = 7;
    cfg.radio.bandwidth_hz = 125.0e3;
    cfg.device_b.has_t_cv_override = true;
    cfg.device_b.t_cv_override_s = 3.25;

    const ScenarioConfig back = load_scenario_json(scenario_to_json(cfg));
    CHECK(back.altitude_m == cfg.altitude_m);
    CHECK(back.radio.sf == cfg.radio.sf);
    CHECK(back.radio.bandwidth_hz == cfg.radio.bandwidth_hz);
    CHECK(back.device_a.theta_c_deg == cfg.device_a.theta_c_deg);
    CHECK(back.device_b.has_t_cv_override);
    CHECK(back.device_b.t_cv_override_s == cfg.device_b.t_cv_override_s);
    CHECK(back.constants.c == cfg.constants.c);
}

TEST_CASE("json input validation") {
    // empty object: all defaults
    const ScenarioConfig cfg = load_scenario_json("{}");
    CHECK(cfg.altitude_m == doctest::Approx(550.0e3));

    CHECK_THROWS_AS(load_scenario_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(load_scenario_json("[1, 2]"), std::invalid_argument);
    // unknown keys are typos, not extensions
    CHECK_THROWS_AS(load_scenario_json(R"({"altittude_m": 5e5})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_scenario_json(R"({"radio": {"sf": 9, "bw": 1}})"),
                    std::invalid_argument);
    // wrong types
    CHECK_THROWS_AS(load_scenario_json(R"({"altitude_m": "high"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_scenario_json(R"({"radio": {"sf": 7.5}})"),
                    std::invalid_argument);
    // failing validation after parse
    CHECK_THROWS_AS(load_scenario_json(R"({"altitude_m": 1.0e3})"),
                    std::invalid_argument);

    const ScenarioConfig ov =
        load_scenario_json(R"({"device_b": {"theta_c_deg": 60.0, "t_cv_s": -2.0}})");
    CHECK(ov.device_b.has_t_cv_override);
    CHECK(ov.device_b.t_cv_override_s == doctest::Approx(-2.0));

    CHECK_THROWS_AS(load_scenario_file("/definitely/not/here.json"),
                    std::invalid_argument);
}
