#include "lorasat/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lorasat/link.hpp"

namespace lorasat {

double VisibilityWindow::total_duration() const {
    double d = 0.0;
    for (const Interval& p : parts) d += p.duration();
    return d;
}

bool VisibilityWindow::contains(double t) const {
    for (const Interval& p : parts)
        if (t >= p.begin && t <= p.end) return true;
    return false;
}

VisibilityWindow single_window(const DevicePass& pass, double theta_min_rad,
                               double theta_max_rad) {
    if (!(theta_min_rad < theta_max_rad))
        throw std::invalid_argument("elevation limits must satisfy min < max");

    const double g_min = central_angle_from_elevation(pass.constants, pass.altitude_m,
                                                      theta_min_rad);
    const double g_max = central_angle_from_elevation(pass.constants, pass.altitude_m,
                                                      theta_max_rad);
    const double cos_cv = std::cos(pass.gamma_cv);

    VisibilityWindow w;
    // The pass culminates at central angle gamma_cv; if even that is farther
    // out than the theta_min ring, the satellite never becomes visible.
    if (std::cos(g_min) / cos_cv > 1.0) return w;

    const double dt_out = clamped_acos(std::cos(g_min) / cos_cv) / pass.omega_f;

    if (std::cos(g_max) / cos_cv > 1.0) {
        // Pass tops out below theta_max: no blind overhead gap, single part.
        w.parts.push_back({pass.t_cv - dt_out, pass.t_cv + dt_out});
        return w;
    }

    const double dt_in = clamped_acos(std::cos(g_max) / cos_cv) / pass.omega_f;
    w.parts.push_back({pass.t_cv - dt_out, pass.t_cv - dt_in});
    w.parts.push_back({pass.t_cv + dt_in, pass.t_cv + dt_out});
    return w;
}

double delta_t_ab(const PhysicalConstants& k, double gamma_cv_a, double gamma_cv_b,
                  double distance_m, double omega_f) {
    const double d_angle = distance_m / k.earth_radius;
    const double num = std::cos(d_angle) -
                       std::sin(gamma_cv_a) * std::sin(gamma_cv_b);
    const double den = std::cos(gamma_cv_a) * std::cos(gamma_cv_b);
    // Dihedral angle between the two device meridians measured at the ground
    // track axis; fails when the devices are closer than their cross-track
    // separation allows.
    const double dihedral = clamped_acos(num / den);
    return dihedral / omega_f;
}

VisibilityWindow shared_window(const VisibilityWindow& a, const VisibilityWindow& b) {
    VisibilityWindow out;
    for (const Interval& pa : a.parts) {
        for (const Interval& pb : b.parts) {
            const double lo = std::max(pa.begin, pb.begin);
            const double hi = std::min(pa.end, pb.end);
            if (lo < hi) out.parts.push_back({lo, hi});
        }
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const Interval& x, const Interval& y) { return x.begin < y.begin; });
    return out;
}

OperatingPoints operating_points(const VisibilityWindow& shared) {
    if (shared.empty())
        throw std::domain_error("shared visibility window is empty");
    OperatingPoints op;
    op.t_high_shift = shared.parts.front().begin;
    op.t_high_rate = shared.parts.front().end;
    return op;
}

LinkGeometry build_link_geometry(const ScenarioConfig& cfg) {
    cfg.validate();
    const double deg = std::numbers::pi / 180.0;
    LinkGeometry g;
    g.pass_a = make_device_pass(cfg.constants, cfg.altitude_m,
                                cfg.inclination_deg * deg,
                                cfg.device_a.theta_c_deg * deg, cfg.t_cv_a_s,
                                cfg.radio.fc_hz);
    g.delta_t_ab_s = delta_t_ab(cfg.constants, g.pass_a.gamma_cv,
                                central_angle_from_elevation(
                                    cfg.constants, cfg.altitude_m,
                                    cfg.device_b.theta_c_deg * deg),
                                cfg.device_distance_m, g.pass_a.omega_f);
    const double t_cv_b = cfg.device_b.has_t_cv_override
                              ? cfg.device_b.t_cv_override_s
                              : cfg.t_cv_a_s + g.delta_t_ab_s;
    g.pass_b = make_device_pass(cfg.constants, cfg.altitude_m,
                                cfg.inclination_deg * deg,
                                cfg.device_b.theta_c_deg * deg, t_cv_b,
                                cfg.radio.fc_hz);
    g.window_a = single_window(g.pass_a, cfg.theta_min_deg * deg,
                               cfg.theta_max_deg * deg);
    g.window_b = single_window(g.pass_b, cfg.theta_min_deg * deg,
                               cfg.theta_max_deg * deg);
    g.shared = shared_window(g.window_a, g.window_b);
    return g;
}

}  // namespace lorasat
