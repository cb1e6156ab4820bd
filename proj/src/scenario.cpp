#include "lorasat/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lorasat {

using nlohmann::json;

double RadioConfig::symbol_period() const {
    return std::ldexp(chip_period(), sf);  // 2^sf * T
}

double RadioConfig::sample_period() const {
    return std::ldexp(chip_period(), s_exp);  // 2^s_exp * T
}

int RadioConfig::samples_per_symbol() const {
    return 1 << (sf - s_exp);
}

double RadioConfig::chirp_rate() const {
    return bandwidth_hz * bandwidth_hz / double(1 << sf);
}

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scenario: " + what);
}

void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
}

}  // namespace

void RadioConfig::validate() const {
    require(sf >= 5 && sf <= 12, "sf must be in [5, 12]");
    require(bandwidth_hz > 0.0, "bandwidth_hz must be positive");
    require(fc_hz > bandwidth_hz / 2.0, "fc_hz must exceed bandwidth_hz/2");
    require(s_exp >= 0 && s_exp <= sf, "s_exp must be in [0, sf]");
}

void ScenarioConfig::validate() const {
    require(schema_version == 1, "unsupported schema_version");
    require(constants.c > 0 && constants.g > 0 && constants.earth_radius > 0,
            "physical constants must be positive");
    require(altitude_m >= 200.0e3 && altitude_m <= 900.0e3,
            "altitude_m must be in [200e3, 900e3]");
    require(inclination_deg >= 0.0 && inclination_deg <= 180.0,
            "inclination_deg must be in [0, 180]");
    require(device_distance_m >= 0.0, "device_distance_m must be non-negative");
    require(theta_min_deg >= 0.0 && theta_min_deg < theta_max_deg &&
                theta_max_deg <= 90.0,
            "elevation limits must satisfy 0 <= theta_min < theta_max <= 90");
    for (const DeviceConfig* dev : {&device_a, &device_b}) {
        require(dev->theta_c_deg > theta_min_deg && dev->theta_c_deg <= 90.0,
                "theta_c_deg must lie in (theta_min_deg, 90]");
    }
    radio.validate();
}

ScenarioConfig scenario_preset(const std::string& name) {
    ScenarioConfig cfg;  // defaults are the survey geometry
    if (name == "default") {
        return cfg;
    }
    if (name == "ber-paper") {
        cfg.device_a.theta_c_deg = 89.0;
        cfg.device_b.theta_c_deg = 89.2;
        cfg.theta_min_deg = 10.0;
        cfg.theta_max_deg = 88.0;
        return cfg;
    }
    fail("unknown preset '" + name + "' (expected 'default' or 'ber-paper')");
}

namespace {

// Pull a numeric field, enforcing presence of a default and type.
double num(const json& j, const char* key, double def) {
    if (!j.contains(key)) return def;
    if (!j[key].is_number()) fail(std::string(key) + " must be a number");
    return j[key].get<double>();
}

int integer(const json& j, const char* key, int def) {
    if (!j.contains(key)) return def;
    if (!j[key].is_number_integer()) fail(std::string(key) + " must be an integer");
    return j[key].get<int>();
}

void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& scope) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known.count(it.key()))
            fail("unknown key '" + it.key() + "' in " + scope);
    }
}

DeviceConfig parse_device(const json& j, const DeviceConfig& def) {
    reject_unknown(j, {"theta_c_deg", "t_cv_s"}, "device");
    DeviceConfig d = def;
    d.theta_c_deg = num(j, "theta_c_deg", def.theta_c_deg);
    if (j.contains("t_cv_s")) {
        d.has_t_cv_override = true;
        d.t_cv_override_s = num(j, "t_cv_s", 0.0);
    }
    return d;
}

}  // namespace

ScenarioConfig load_scenario_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) fail("top level must be an object");

    reject_unknown(j,
                   {"schema_version", "constants", "altitude_m", "inclination_deg",
                    "device_distance_m", "theta_min_deg", "theta_max_deg", "t_cv_a_s",
                    "device_a", "device_b", "radio"},
                   "scenario");

    ScenarioConfig cfg;
    cfg.schema_version = integer(j, "schema_version", 1);
    if (j.contains("constants")) {
        const json& k = j["constants"];
        reject_unknown(k, {"c", "g", "earth_radius", "omega_earth"}, "constants");
        cfg.constants.c = num(k, "c", cfg.constants.c);
        cfg.constants.g = num(k, "g", cfg.constants.g);
        cfg.constants.earth_radius = num(k, "earth_radius", cfg.constants.earth_radius);
        cfg.constants.omega_earth = num(k, "omega_earth", cfg.constants.omega_earth);
    }
    cfg.altitude_m = num(j, "altitude_m", cfg.altitude_m);
    cfg.inclination_deg = num(j, "inclination_deg", cfg.inclination_deg);
    cfg.device_distance_m = num(j, "device_distance_m", cfg.device_distance_m);
    cfg.theta_min_deg = num(j, "theta_min_deg", cfg.theta_min_deg);
    cfg.theta_max_deg = num(j, "theta_max_deg", cfg.theta_max_deg);
    cfg.t_cv_a_s = num(j, "t_cv_a_s", cfg.t_cv_a_s);
    if (j.contains("device_a")) cfg.device_a = parse_device(j["device_a"], cfg.device_a);
    if (j.contains("device_b")) cfg.device_b = parse_device(j["device_b"], cfg.device_b);
    if (j.contains("radio")) {
        const json& r = j["radio"];
        reject_unknown(r, {"fc_hz", "bandwidth_hz", "sf", "s_exp"}, "radio");
        cfg.radio.fc_hz = num(r, "fc_hz", cfg.radio.fc_hz);
        cfg.radio.bandwidth_hz = num(r, "bandwidth_hz", cfg.radio.bandwidth_hz);
        cfg.radio.sf = integer(r, "sf", cfg.radio.sf);
        cfg.radio.s_exp = integer(r, "s_exp", cfg.radio.s_exp);
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_scenario_json(ss.str());
}

std::string scenario_to_json(const ScenarioConfig& cfg) {
    json j;
    j["schema_version"] = cfg.schema_version;
    j["constants"] = {{"c", cfg.constants.c},
                      {"g", cfg.constants.g},
                      {"earth_radius", cfg.constants.earth_radius},
                      {"omega_earth", cfg.constants.omega_earth}};
    j["altitude_m"] = cfg.altitude_m;
    j["inclination_deg"] = cfg.inclination_deg;
    j["device_distance_m"] = cfg.device_distance_m;
    j["theta_min_deg"] = cfg.theta_min_deg;
    j["theta_max_deg"] = cfg.theta_max_deg;
    j["t_cv_a_s"] = cfg.t_cv_a_s;
    j["device_a"] = {{"theta_c_deg", cfg.device_a.theta_c_deg}};
    if (cfg.device_a.has_t_cv_override)
        j["device_a"]["t_cv_s"] = cfg.device_a.t_cv_override_s;
    j["device_b"] = {{"theta_c_deg", cfg.device_b.theta_c_deg}};
    if (cfg.device_b.has_t_cv_override)
        j["device_b"]["t_cv_s"] = cfg.device_b.t_cv_override_s;
    j["radio"] = {{"fc_hz", cfg.radio.fc_hz},
                  {"bandwidth_hz", cfg.radio.bandwidth_hz},
                  {"sf", cfg.radio.sf},
                  {"s_exp", cfg.radio.s_exp}};
    return j.dump(2);
}

}  // namespace lorasat
