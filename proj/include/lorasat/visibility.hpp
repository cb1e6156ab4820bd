#pragma once

#include <vector>

#include "lorasat/orbit_geometry.hpp"

namespace lorasat {

struct Interval {
    double begin = 0.0;
    double end = 0.0;
    double duration() const { return end - begin; }
};

// A visibility window is an ordered, disjoint union of closed intervals.
// For one device with elevation limits [theta_min, theta_max] strictly below
// the pass maximum it has two parts (approach and departure, separated by the
// blind overhead gap); when theta_c <= theta_max the parts merge into one.
struct VisibilityWindow {
    std::vector<Interval> parts;

    bool empty() const { return parts.empty(); }
    double total_duration() const;
    bool contains(double t) const;
};

// Half-widths of the single visibility window:
//   dt(theta) = (1/omega_F) * arccos(cos(gamma(theta)) / cos(gamma_cv)).
// Returns the window for elevation limits [theta_min, theta_max]; empty when
// the pass never reaches theta_min.
VisibilityWindow single_window(const DevicePass& pass, double theta_min_rad,
                               double theta_max_rad);

// Time offset between the two devices' closest approaches, from the dihedral
// angle at the track axis between the device meridians:
//   omega_F * dt_AB = arccos[(cos(d/R) - sin g_A sin g_B) / (cos g_A cos g_B)].
// Throws InconsistentGeometry when d is smaller than the cross-track
// separation implied by the two central angles.
double delta_t_ab(const PhysicalConstants& k, double gamma_cv_a, double gamma_cv_b,
                  double distance_m, double omega_f);

// Interval intersection of two windows.
VisibilityWindow shared_window(const VisibilityWindow& a, const VisibilityWindow& b);

// Transmission start times of interest inside a shared window:
// the first segment's start has the largest |f_d| (high-Doppler-shift point)
// and its end the largest |df_d/dt| (high-Doppler-rate point).
struct OperatingPoints {
    double t_high_shift = 0.0;
    double t_high_rate = 0.0;
};

// Throws std::domain_error when the shared window is empty.
OperatingPoints operating_points(const VisibilityWindow& shared);

}  // namespace lorasat
