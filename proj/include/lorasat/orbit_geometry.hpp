#pragma once

#include <stdexcept>

#include "lorasat/constants.hpp"

namespace lorasat {

// Thrown when a geometric configuration is self-contradictory, e.g. two
// devices closer together than their cross-track separation allows.
class InconsistentGeometry : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Orbital angular velocity of a circular orbit at altitude H:
//   omega_S = sqrt(g R^2 / (R + H)^3).
double satellite_angular_velocity(const PhysicalConstants& k, double altitude_m);

// Angular velocity of the sub-satellite point in the Earth-fixed frame,
// folding Earth rotation into the orbital motion:
//   omega_F = omega_S - omega_E * cos(i).
double relative_angular_velocity(const PhysicalConstants& k, double altitude_m,
                                 double inclination_rad);

// Orbital period 2*pi / omega_S, seconds.
double orbit_period(const PhysicalConstants& k, double altitude_m);

// Earth central angle between device and sub-satellite point for a given
// elevation angle theta (radians):
//   gamma(theta) = arccos(R/(R+H) * cos(theta)) - theta.
double central_angle_from_elevation(const PhysicalConstants& k, double altitude_m,
                                    double theta_rad);

// Line-of-sight distance for a given central angle gamma:
//   rho = sqrt((R+H)^2 + R^2 - 2 R (R+H) cos(gamma)).
double slant_range_from_central_angle(const PhysicalConstants& k, double altitude_m,
                                      double gamma_rad);

// One device's view of one pass: the ground track is modeled as a great
// circle in the rotated frame, passing the device at central angle gamma_cv
// (set by the theoretical max elevation theta_c) at time t_cv and advancing
// at omega_F. All per-time quantities below derive from
//   cos(gamma(t)) = cos(gamma_cv) * cos(omega_F * (t - t_cv)).
struct DevicePass {
    PhysicalConstants constants;
    double altitude_m = 0.0;
    double omega_f = 0.0;     // rad/s, Earth-fixed track rate
    double gamma_cv = 0.0;    // rad, central angle at closest approach
    double t_cv = 0.0;        // s, central visibility time
    double f_ref = 868.0e6;   // Hz, default reference frequency for Doppler

    double gamma_at(double t) const;        // central angle, rad
    double slant_range_at(double t) const;  // m
    double radial_velocity_at(double t) const;  // d(rho)/dt, m/s (positive = receding)
    double doppler_shift_at(double t) const { return doppler_shift_at(t, f_ref); }
    double doppler_shift_at(double t, double f_ref_hz) const;  // -f v / c, Hz
    // Doppler rate by symmetric finite difference (default step 0.1 s).
    double doppler_rate_at(double t, double fd_step_s = 0.1) const;
    double doppler_rate_at(double t, double f_ref_hz, double fd_step_s) const;
};

DevicePass make_device_pass(const PhysicalConstants& k, double altitude_m,
                            double inclination_rad, double theta_c_rad,
                            double t_cv, double f_ref_hz);

// Clamp x into [-1, 1] when within tol of the interval, otherwise throw
// InconsistentGeometry. Shared by every arccos in the geometry chain.
double clamped_acos(double x, double tol = 1e-12);

}  // namespace lorasat
