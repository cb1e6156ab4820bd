#pragma once

#include <string>

#include "lorasat/constants.hpp"

namespace lorasat {

// LoRa-style chirp radio parameters shared by transmitter models.
//
// The discrete-time model samples each symbol at period T_d = 2^s_exp / B,
// giving N = 2^(sf - s_exp) samples per symbol. s_exp = 0 is critical
// (one sample per chip); larger s_exp decimates.
struct RadioConfig {
    double fc_hz = 868.0e6;       // carrier (center) frequency
    double bandwidth_hz = 250.0e3;  // chirp sweep bandwidth B
    int sf = 9;                   // spreading factor, 5..12
    int s_exp = 0;                // sampling decimation exponent, 2^s_exp <= 2^sf

    double f_min() const { return fc_hz - bandwidth_hz / 2.0; }
    double chip_period() const { return 1.0 / bandwidth_hz; }       // T
    double symbol_period() const;                                   // T_s = 2^sf * T
    double sample_period() const;                                   // T_d = 2^s_exp * T
    int samples_per_symbol() const;                                 // N = 2^(sf - s_exp)
    int symbol_count() const { return 1 << sf; }                    // 2^sf symbol values
    double chirp_rate() const;                                      // C_r = B^2 / 2^sf

    void validate() const;  // throws std::invalid_argument
};

// One ground device: its pass geometry is fully determined by the theoretical
// maximum elevation angle theta_c reached at the central visibility time t_cv.
struct DeviceConfig {
    double theta_c_deg = 56.0;
    // t_cv for device A is authoritative; device B's t_cv is derived from the
    // inter-device distance unless explicitly overridden (t_cv_override_s set).
    bool has_t_cv_override = false;
    double t_cv_override_s = 0.0;
};

// Full scenario: satellite orbit, two ground devices, radio defaults.
// Angles are stored in degrees as written in config files and converted to
// radians at the geometry layer.
struct ScenarioConfig {
    int schema_version = 1;
    PhysicalConstants constants;

    double altitude_m = 550.0e3;       // circular orbit altitude H
    double inclination_deg = 15.0;     // orbit inclination i
    double device_distance_m = 10.0e3; // ground distance d between A and B
    double theta_min_deg = 10.0;       // realistic elevation lower limit
    double theta_max_deg = 50.0;       // realistic elevation upper limit
    double t_cv_a_s = 0.0;             // device A central visibility time

    DeviceConfig device_a{56.0};
    DeviceConfig device_b{56.2};

    RadioConfig radio;

    void validate() const;  // throws std::invalid_argument
};

// Named scenario presets.
//   "default"   - survey geometry (theta_c 56/56.2 deg, limits [10, 50] deg)
//   "ber-paper" - near-overhead geometry used for the error-rate experiments
//                 (theta_c 89/89.2 deg, limits [10, 88] deg)
ScenarioConfig scenario_preset(const std::string& name);

// JSON (de)serialization. Unknown keys are rejected to catch typos; all keys
// are optional and default to the survey preset values. Throws
// std::invalid_argument on malformed content or failed validation.
ScenarioConfig load_scenario_json(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);
std::string scenario_to_json(const ScenarioConfig& cfg);

}  // namespace lorasat
