#include "lorasat/orbit_geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lorasat {

double clamped_acos(double x, double tol) {
    if (x > 1.0) {
        if (x > 1.0 + tol) {
            std::ostringstream os;
            os << "arccos argument " << x << " exceeds 1 beyond tolerance";
            throw InconsistentGeometry(os.str());
        }
        return 0.0;
    }
    if (x < -1.0) {
        if (x < -1.0 - tol) {
            std::ostringstream os;
            os << "arccos argument " << x << " below -1 beyond tolerance";
            throw InconsistentGeometry(os.str());
        }
        return std::numbers::pi;
    }
    return std::acos(x);
}

double satellite_angular_velocity(const PhysicalConstants& k, double altitude_m) {
    if (altitude_m <= 0.0)
        throw std::invalid_argument("altitude must be positive");
    const double r = k.earth_radius;
    const double a = r + altitude_m;  // circular orbit radius
    // Gravity at the surface scaled to orbit radius: omega^2 a = g (R/a)^2.
    return std::sqrt(k.g * r * r / (a * a * a));
}

double relative_angular_velocity(const PhysicalConstants& k, double altitude_m,
                                 double inclination_rad) {
    return satellite_angular_velocity(k, altitude_m) -
           k.omega_earth * std::cos(inclination_rad);
}

double orbit_period(const PhysicalConstants& k, double altitude_m) {
    return 2.0 * std::numbers::pi / satellite_angular_velocity(k, altitude_m);
}

double central_angle_from_elevation(const PhysicalConstants& k, double altitude_m,
                                    double theta_rad) {
    if (theta_rad < 0.0 || theta_rad > std::numbers::pi / 2.0 + 1e-12)
        throw std::invalid_argument("elevation angle must be in [0, pi/2]");
    const double q = k.earth_radius / (k.earth_radius + altitude_m);
    // From the Earth-center triangle: the ray at elevation theta meets the
    // orbit sphere where the geocentric angle satisfies this relation.
    return clamped_acos(q * std::cos(theta_rad)) - theta_rad;
}

double slant_range_from_central_angle(const PhysicalConstants& k, double altitude_m,
                                      double gamma_rad) {
    const double r = k.earth_radius;
    const double a = r + altitude_m;
    return std::sqrt(a * a + r * r - 2.0 * r * a * std::cos(gamma_rad));
}

double DevicePass::gamma_at(double t) const {
    const double phi = omega_f * (t - t_cv);
    return clamped_acos(std::cos(gamma_cv) * std::cos(phi));
}

double DevicePass::slant_range_at(double t) const {
    return slant_range_from_central_angle(constants, altitude_m, gamma_at(t));
}

double DevicePass::radial_velocity_at(double t) const {
    const double r = constants.earth_radius;
    const double a = r + altitude_m;
    const double phi = omega_f * (t - t_cv);
    // d(rho)/dt with cos(gamma(t)) = cos(gamma_cv) cos(omega_f (t - t_cv)):
    // positive after closest approach (satellite receding).
    return r * a * std::sin(phi) * std::cos(gamma_cv) * omega_f / slant_range_at(t);
}

double DevicePass::doppler_shift_at(double t, double f_ref_hz) const {
    return -f_ref_hz / constants.c * radial_velocity_at(t);
}

double DevicePass::doppler_rate_at(double t, double fd_step_s) const {
    return doppler_rate_at(t, f_ref, fd_step_s);
}

double DevicePass::doppler_rate_at(double t, double f_ref_hz, double fd_step_s) const {
    if (fd_step_s <= 0.0)
        throw std::invalid_argument("doppler rate step must be positive");
    return (doppler_shift_at(t + fd_step_s, f_ref_hz) -
            doppler_shift_at(t - fd_step_s, f_ref_hz)) /
           (2.0 * fd_step_s);
}

DevicePass make_device_pass(const PhysicalConstants& k, double altitude_m,
                            double inclination_rad, double theta_c_rad, double t_cv,
                            double f_ref_hz) {
    DevicePass pass;
    pass.constants = k;
    pass.altitude_m = altitude_m;
    pass.omega_f = relative_angular_velocity(k, altitude_m, inclination_rad);
    pass.gamma_cv = central_angle_from_elevation(k, altitude_m, theta_c_rad);
    pass.t_cv = t_cv;
    pass.f_ref = f_ref_hz;
    if (pass.omega_f <= 0.0)
        throw InconsistentGeometry("relative angular velocity must be positive");
    return pass;
}

}  // namespace lorasat
