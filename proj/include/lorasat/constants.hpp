#pragma once

namespace lorasat {

// Physical constants used by the link geometry. Values are deliberately the
// rounded engineering figures the rest of the model is calibrated against;
// callers that need different ellipsoid/gravity conventions can override the
// fields through the scenario config.
struct PhysicalConstants {
    double c = 3.0e8;          // speed of light, m/s
    double g = 9.8;            // gravitational acceleration at the surface, m/s^2
    double earth_radius = 6371.0e3;  // mean Earth radius R, m
    double omega_earth = 7.292e-5;   // Earth rotation rate, rad/s
};

}  // namespace lorasat
